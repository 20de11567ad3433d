"""Graded analogical-proportion kernels.

Six measures of the degree to which "a relates to b as c relates to d"
over values in [0, 1], plus the Boolean base case and the extension to
feature vectors by averaging coordinate-wise degrees.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

VARIANTS = ("A", "A-strict", "G", "MM", "AE", "AE-graded")
DEFAULT_EPSILON = 0.1


@dataclass(frozen=True)
class ProportionMeasure:
    """A choice of analogy measure; epsilon is used by the approximate-
    equality variants only."""

    variant: str
    epsilon: float = DEFAULT_EPSILON

    def __post_init__(self):
        if self.variant not in VARIANTS:
            raise ValueError(f"unknown measure {self.variant!r}; "
                             f"choose from {', '.join(VARIANTS)}")
        if self.variant in ("AE", "AE-graded") and not 0.0 < self.epsilon <= 1.0:
            raise ValueError("epsilon must lie in (0, 1]")

    @classmethod
    def parse(cls, spec: str) -> "ProportionMeasure":
        """Parse a CLI measure name such as `MM` or `AE:eps=0.2`."""
        name, _, opt = spec.partition(":")
        name = name.strip()
        eps = DEFAULT_EPSILON
        if opt:
            key, _, val = opt.partition("=")
            if key.strip() != "eps":
                raise ValueError(f"unknown measure option {key.strip()!r}")
            eps = float(val)
        return cls(name, eps)

    def __str__(self) -> str:
        if self.variant in ("AE", "AE-graded"):
            return f"{self.variant}:eps={self.epsilon:g}"
        return self.variant


def boolean_proportion(a: int, b: int, c: int, d: int) -> int:
    """Boolean analogical proportion: ((a => b) == (c => d)) and
    ((b => a) == (d => c)), true on exactly six of the 16 patterns."""
    for v in (a, b, c, d):
        if v not in (0, 1):
            raise ValueError("boolean_proportion expects inputs in {0, 1}")
    imp = lambda x, y: 1 if x <= y else 0
    return int(imp(a, b) == imp(c, d) and imp(b, a) == imp(d, c))


def _check_unit(*arrays):
    for x in arrays:
        if np.any(x < 0.0) or np.any(x > 1.0):
            raise ValueError("proportion inputs must lie in [0, 1]")


def proportion_kernel(m: ProportionMeasure, a, b, c, d) -> np.ndarray:
    """Element-wise degree of analogical proportion under measure `m`.

    Accepts scalars or broadcastable arrays with entries in [0, 1];
    validation is the caller's job (see scalar_proportion).
    """
    a, b, c, d = (np.asarray(x, dtype=float) for x in (a, b, c, d))
    if m.variant in ("A", "A-strict"):
        diff_ab = a - b
        diff_cd = c - d
        same = np.sign(diff_ab) == np.sign(diff_cd)
        agree = 1.0 - np.abs(diff_ab - diff_cd)
        if m.variant == "A":
            other = 1.0 - np.maximum(np.abs(diff_ab), np.abs(diff_cd))
        else:
            other = np.zeros_like(agree)
        return np.where(same, agree, other)
    if m.variant == "G":
        ad = a * d
        bc = b * c
        hi = np.maximum(ad, bc)
        same = (np.sign(a - b) == np.sign(c - d)) & (hi > 0.0)
        with np.errstate(divide="ignore", invalid="ignore"):
            ratio = np.minimum(ad, bc) / hi
        return np.where(same, ratio, 0.0)
    if m.variant == "MM":
        lo_gap = np.abs(np.minimum(a, d) - np.minimum(b, c))
        hi_gap = np.abs(np.maximum(a, d) - np.maximum(b, c))
        return 1.0 - np.maximum(lo_gap, hi_gap)
    if m.variant == "AE":
        near = lambda x, y: (np.abs(x - y) <= m.epsilon).astype(float)
        return np.maximum(near(a, b) * near(c, d), near(a, c) * near(b, d))
    # AE-graded
    near = lambda x, y: np.maximum(1.0 - np.abs(x - y) / m.epsilon, 0.0)
    return np.maximum(near(a, b) * near(c, d), near(a, c) * near(b, d))


def scalar_proportion(m: ProportionMeasure, a: float, b: float,
                      c: float, d: float) -> float:
    """Degree v(a, b, c, d) for four scalars in [0, 1]."""
    arrs = tuple(np.asarray(x, dtype=float) for x in (a, b, c, d))
    _check_unit(*arrs)
    return float(proportion_kernel(m, *arrs))


def vector_proportion(m: ProportionMeasure, a, b, c, d,
                      aggregation: str = "mean") -> float:
    """Degree for four feature vectors: coordinate-wise degrees combined
    by the arithmetic mean (or, optionally, the minimum)."""
    a, b, c, d = (np.asarray(x, dtype=float) for x in (a, b, c, d))
    if not (a.shape == b.shape == c.shape == d.shape) or a.ndim != 1 or a.size < 1:
        raise ValueError("expected four 1-d vectors of equal length >= 1")
    _check_unit(a, b, c, d)
    degrees = proportion_kernel(m, a, b, c, d)
    if aggregation == "mean":
        return float(degrees.mean())
    if aggregation == "min":
        return float(degrees.min())
    raise ValueError(f"unknown aggregation {aggregation!r}")


def parse_measures(spec: str) -> list[ProportionMeasure]:
    """Parse a comma-separated measure list from the CLI."""
    return [ProportionMeasure.parse(tok) for tok in spec.split(",") if tok.strip()]
