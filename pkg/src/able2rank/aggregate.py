"""Rank aggregation with the Bradley-Terry-Luce model.

The comparison matrix is turned into latent utilities by maximum
likelihood (minorization-maximization fixed point), and the predicted
ranking is the descending sort of those utilities.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .analogy import ProportionMeasure
from .dataset import RankingInstance, pool_pairs
from .pairwise import ComparisonMatrix, app, comparison_matrix
from .preprocess import preprocess_many

DEFAULT_TOL = 1e-8
DEFAULT_MAX_ITER = 10_000
DEFAULT_SMOOTHING = 0.1

_THETA_FLOOR = 1e-300  # keeps unsmoothed all-loss items positive


@dataclass(frozen=True)
class ThetaVector:
    """Fitted BTL utilities, normalized to sum 1."""

    theta: np.ndarray
    iterations: int
    converged: bool
    loglik_trace: tuple[float, ...] = ()


@dataclass(frozen=True)
class Ranking:
    """A total order: `order[p]` is the item at position p (0-based),
    `ranks[i]` the position of item i."""

    order: np.ndarray

    @property
    def n(self) -> int:
        return self.order.shape[0]

    @property
    def ranks(self) -> np.ndarray:
        inv = np.empty_like(self.order)
        inv[self.order] = np.arange(self.n)
        return inv

    @classmethod
    def identity(cls, n: int) -> "Ranking":
        return cls(np.arange(n))

    @classmethod
    def from_ranks(cls, ranks) -> "Ranking":
        ranks = np.asarray(ranks)
        order = np.empty_like(ranks)
        order[ranks] = np.arange(ranks.shape[0])
        return cls(order)


def _loglik(counts: np.ndarray, theta: np.ndarray) -> float:
    n = counts.shape[0]
    i, j = np.nonzero(counts)
    if i.size == 0:
        return 0.0
    return float(np.sum(counts[i, j] * (np.log(theta[i]) - np.log(theta[i] + theta[j]))))


def btl_fit(C: ComparisonMatrix | np.ndarray, tol: float = DEFAULT_TOL,
            max_iter: int = DEFAULT_MAX_ITER,
            smoothing: float = DEFAULT_SMOOTHING,
            track_loglik: bool = False) -> ThetaVector:
    """Maximum-likelihood BTL fit via the MM fixed point
    theta_i <- W_i / sum_{j != i} (c_ij + c_ji) / (theta_i + theta_j).

    `smoothing` is added to every off-diagonal count to keep the MLE
    finite when some item wins (or loses) every comparison.
    """
    counts = C.counts if isinstance(C, ComparisonMatrix) else np.asarray(C, dtype=float)
    counts = counts.astype(float)
    n = counts.shape[0]
    if counts.shape != (n, n) or n < 2:
        raise ValueError("comparison matrix must be square with n >= 2")
    if not np.all(np.isfinite(counts)) or np.any(counts < 0):
        raise ValueError("counts must be finite and non-negative")

    smoothed = counts + smoothing
    np.fill_diagonal(smoothed, 0.0)
    totals = smoothed + smoothed.T  # (c'_ij + c'_ji)
    wins = smoothed.sum(axis=1)

    theta = np.full(n, 1.0 / n)
    trace = []
    if track_loglik:
        trace.append(_loglik(smoothed, theta))
    converged = False
    iterations = 0
    for iterations in range(1, max_iter + 1):
        pair_sums = theta[:, None] + theta[None, :]
        np.fill_diagonal(pair_sums, 1.0)  # diagonal of totals is 0 anyway
        denom = (totals / pair_sums).sum(axis=1)
        with np.errstate(divide="ignore", invalid="ignore"):
            new_theta = np.where(denom > 0, wins / np.where(denom > 0, denom, 1.0), theta)
        new_theta = np.maximum(new_theta, _THETA_FLOOR)
        new_theta /= new_theta.sum()
        delta = np.max(np.abs(new_theta - theta))
        theta = new_theta
        if track_loglik:
            trace.append(_loglik(smoothed, theta))
        if delta < tol:
            converged = True
            break
    return ThetaVector(theta, iterations, converged, tuple(trace))


def rank_from_scores(theta: ThetaVector | np.ndarray) -> Ranking:
    """Items sorted by utility descending; ties by ascending item index."""
    scores = theta.theta if isinstance(theta, ThetaVector) else np.asarray(theta)
    return Ranking(np.argsort(-scores, kind="stable"))


def able2rank_predict(train: RankingInstance | Sequence[RankingInstance],
                      query: RankingInstance | np.ndarray,
                      measure: ProportionMeasure, k: int,
                      tol: float = DEFAULT_TOL, max_iter: int = DEFAULT_MAX_ITER,
                      smoothing: float = DEFAULT_SMOOTHING,
                      threads: int = 1) -> Ranking:
    """Full analogy-based prediction for one query set.

    Raw (unpreprocessed) inputs are accepted: preprocessing, pair
    extraction, analogical transfer, top-k counting, BTL fitting, and the
    final sort are run in sequence.
    """
    instances = [train] if isinstance(train, RankingInstance) else list(train)
    if isinstance(query, np.ndarray):
        query = RankingInstance(query, instances[0].schema, "query")
    processed_train, processed_query, _, _ = preprocess_many(instances, query)
    store = pool_pairs(processed_train)
    lists = app(store, processed_query, measure, threads=threads)
    C = comparison_matrix(lists, processed_query.n, k)
    theta = btl_fit(C, tol=tol, max_iter=max_iter, smoothing=smoothing)
    return rank_from_scores(theta)
