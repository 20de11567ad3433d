"""Embedded property suite for the `selftest` CLI command."""

from __future__ import annotations

import itertools

import numpy as np

from . import analogy
from .aggregate import btl_fit
from .evaluation import ranking_loss

BOOLEAN_TRUE_PATTERNS = {
    (0, 0, 0, 0), (0, 0, 1, 1), (0, 1, 0, 1),
    (1, 0, 1, 0), (1, 1, 0, 0), (1, 1, 1, 1),
}

_ALL_MEASURES = [analogy.ProportionMeasure(v) for v in analogy.VARIANTS]


def check_boolean_table() -> bool:
    for pattern in itertools.product((0, 1), repeat=4):
        expected = int(pattern in BOOLEAN_TRUE_PATTERNS)
        if analogy.boolean_proportion(*pattern) != expected:
            return False
    return True


def check_boolean_reduction() -> bool:
    for variant in ("A", "A-strict", "MM"):
        m = analogy.ProportionMeasure(variant)
        for pattern in itertools.product((0, 1), repeat=4):
            got = analogy.scalar_proportion(m, *pattern)
            if got != analogy.boolean_proportion(*pattern):
                return False
    return True


def check_reflexivity(samples: int = 2000, seed: int = 7) -> bool:
    rng = np.random.default_rng(seed)
    for m in _ALL_MEASURES:
        a = rng.random(samples)
        b = rng.random(samples)
        if m.variant == "G":
            a = np.maximum(a, 1e-3)
            b = np.maximum(b, 1e-3)
        got = analogy.proportion_kernel(m, a, b, a, b)
        if not np.all(np.abs(got - 1.0) <= 1e-12):
            return False
    return True


def check_symmetry(samples: int = 2000, seed: int = 11) -> bool:
    rng = np.random.default_rng(seed)
    for m in _ALL_MEASURES:
        a, b, c, d = rng.random((4, samples))
        lhs = analogy.proportion_kernel(m, a, b, c, d)
        rhs = analogy.proportion_kernel(m, c, d, a, b)
        if not np.array_equal(lhs, rhs):
            return False
    return True


def check_btl_two_items() -> bool:
    counts = np.array([[0, 3], [1, 0]])
    theta = btl_fit(counts, smoothing=0.0).theta
    return abs(theta[0] / theta[1] - 3.0) < 1e-6


def check_loss_oracle() -> bool:
    for perm in itertools.permutations(range(4)):
        ranks = np.array(perm)
        identity = np.arange(4)
        brute = sum(
            1
            for i in range(4)
            for j in range(i + 1, 4)
            if (identity[i] - identity[j]) * (ranks[i] - ranks[j]) < 0
        )
        if ranking_loss(identity, ranks) != brute / 6:
            return False
    return True


CHECKS = [
    ("boolean 6-pattern table", check_boolean_table),
    ("boolean reduction of A, A-strict, MM", check_boolean_reduction),
    ("reflexivity of all measures", check_reflexivity),
    ("symmetry of all measures", check_symmetry),
    ("BTL two-item closed form", check_btl_two_items),
    ("ranking loss vs brute-force inversions", check_loss_oracle),
]


def run_selftest(report=print) -> bool:
    """Run every embedded property check; returns True when all pass."""
    all_ok = True
    for name, check in CHECKS:
        ok = bool(check())
        all_ok &= ok
        report(f"[{'PASS' if ok else 'FAIL'}] {name}")
    return all_ok
