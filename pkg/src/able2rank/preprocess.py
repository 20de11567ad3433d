"""Feature preprocessing: skewness-driven log transform, min-max
normalization for the analogy pipeline, standardization for baselines."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .dataset import RankingInstance


@dataclass(frozen=True)
class ColumnReport:
    name: str
    kind: str
    log_applied: bool = False
    low: float = float("nan")
    high: float = float("nan")
    mean: float = float("nan")
    std: float = float("nan")


@dataclass(frozen=True)
class PreprocessReport:
    """Per-column record of the transformations applied to one split."""

    split: str
    columns: tuple[ColumnReport, ...]

    def to_text(self) -> str:
        lines = [f"split={self.split}"]
        for c in self.columns:
            parts = [f"column={c.name}", f"kind={c.kind}",
                     f"log={'yes' if c.log_applied else 'no'}"]
            if not math.isnan(c.low):
                parts.append(f"min={c.low:.10g}")
                parts.append(f"max={c.high:.10g}")
            if not math.isnan(c.mean):
                parts.append(f"mean={c.mean:.10g}")
                parts.append(f"std={c.std:.10g}")
            lines.append(" ".join(parts))
        return "\n".join(lines) + "\n"


def skewness(values) -> float:
    """Adjusted Fisher-Pearson sample skewness, g1 * sqrt(n(n-1)) / (n-2).

    Degenerate inputs (fewer than 3 values, or zero variance) return 0,
    meaning no transform preference either way.
    """
    x = np.asarray(values, dtype=float)
    n = x.size
    if n < 3:
        return 0.0
    m = x.mean()
    m2 = np.mean((x - m) ** 2)
    if m2 == 0.0:
        return 0.0
    g1 = np.mean((x - m) ** 3) / m2 ** 1.5
    return float(g1 * math.sqrt(n * (n - 1)) / (n - 2))


def maybe_log_transform(column) -> tuple[np.ndarray, bool]:
    """Natural log of a column if that reduces absolute skewness.

    Columns containing any non-positive value are never transformed.
    """
    x = np.asarray(column, dtype=float)
    if np.any(x <= 0.0):
        return x, False
    logged = np.log(x)
    if abs(skewness(logged)) < abs(skewness(x)):
        return logged, True
    return x, False


def min_max_normalize(column) -> np.ndarray:
    """Map a column onto [0, 1]; constant columns map to 0.5."""
    x = np.asarray(column, dtype=float)
    lo, hi = x.min(), x.max()
    if hi == lo:
        return np.full_like(x, 0.5)
    return (x - lo) / (hi - lo)


def standardize(column) -> np.ndarray:
    """Center and scale by sample mean/std; constant columns map to 0."""
    x = np.asarray(column, dtype=float)
    mu = x.mean()
    sigma = x.std(ddof=1) if x.size > 1 else 0.0
    if sigma == 0.0:
        return np.zeros_like(x)
    return (x - mu) / sigma


def _transform_split(instance: RankingInstance, log_flags, split: str):
    values = instance.values.copy()
    reports = []
    for k, col in enumerate(instance.schema.columns):
        if col.kind != "numeric":
            # binary and ordinal features are already encoded in [0, 1]
            reports.append(ColumnReport(col.name, col.kind))
            continue
        x = values[:, k]
        # the trained log decision only applies where the log is defined
        applied = log_flags[k] and bool(np.all(x > 0.0))
        if applied:
            x = np.log(x)
        lo, hi = float(x.min()), float(x.max())
        values[:, k] = min_max_normalize(x)
        reports.append(ColumnReport(col.name, col.kind,
                                    log_applied=applied, low=lo, high=hi))
    return instance.with_values(values), PreprocessReport(split, tuple(reports))


def preprocess_for_able2rank(train: RankingInstance, test: RankingInstance):
    """Preprocess a train/test split for the analogy pipeline.

    The log-transform decision is learned per column on the training split
    and copied to the test split; min-max statistics are computed split-
    locally. Binary and ordinal columns pass through untouched.
    Returns (train', test', train_report, test_report).
    """
    if train.schema != test.schema:
        raise ValueError("train and test instances have different schemas")
    log_flags = []
    for k, col in enumerate(train.schema.columns):
        if col.kind != "numeric":
            log_flags.append(False)
            continue
        _, applied = maybe_log_transform(train.values[:, k])
        log_flags.append(applied)
    train_out, train_rep = _transform_split(train, log_flags, "train")
    test_out, test_rep = _transform_split(test, log_flags, "test")
    return train_out, test_out, train_rep, test_rep


def preprocess_many(train_instances, query: RankingInstance):
    """Preprocess several training instances and one query split.

    The log decision is learned per column on the pooled training values
    and applied everywhere; min-max statistics stay split-local (one split
    per training instance, plus the query). Returns (train_list, query',
    report_list, query_report).
    """
    train_instances = list(train_instances)
    if not train_instances:
        raise ValueError("no training instances")
    schema = train_instances[0].schema
    for inst in train_instances + [query]:
        if inst.schema != schema:
            raise ValueError("all instances must share one schema")
    log_flags = []
    for k, col in enumerate(schema.columns):
        if col.kind != "numeric":
            log_flags.append(False)
            continue
        pooled = np.concatenate([inst.values[:, k] for inst in train_instances])
        _, applied = maybe_log_transform(pooled)
        log_flags.append(applied)
    outs, reps = [], []
    for inst in train_instances:
        out, rep = _transform_split(inst, log_flags, "train")
        outs.append(out)
        reps.append(rep)
    q_out, q_rep = _transform_split(query, log_flags, "test")
    return outs, q_out, reps, q_rep


def standardize_for_baseline(train_values: np.ndarray, test_values: np.ndarray,
                             names=None, kinds=None):
    """Standardize both splits with training statistics.

    Returns (train_values, test_values, report). Leakage-safe: the test
    split reuses the training mean and standard deviation per column.
    """
    if train_values.shape[1] != test_values.shape[1]:
        raise ValueError("train and test feature dimensions differ")
    d = train_values.shape[1]
    names = names or [f"f{k}" for k in range(d)]
    kinds = kinds or ["numeric"] * d
    tr = train_values.astype(float).copy()
    te = test_values.astype(float).copy()
    reports = []
    for k in range(d):
        x = tr[:, k]
        mu = float(x.mean())
        sigma = float(x.std(ddof=1)) if x.size > 1 else 0.0
        if sigma == 0.0:
            tr[:, k] = 0.0
            te[:, k] = 0.0
        else:
            tr[:, k] = (x - mu) / sigma
            te[:, k] = (te[:, k] - mu) / sigma
        reports.append(ColumnReport(names[k], kinds[k], mean=mu, std=sigma))
    return tr, te, PreprocessReport("train-statistics", tuple(reports))
