"""Analogical transfer of pairwise preferences.

For every unordered query pair, every stored training preference is
scored by analogical proportion in both orientations; the direction-
labeled score lists are then reduced to a comparison matrix by counting
support among the top-k scores.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .analogy import ProportionMeasure, proportion_kernel
from .dataset import PreferenceStore, RankingInstance


@dataclass(frozen=True)
class SupportList:
    """Scored support entries for one query pair (i, j), sorted by score
    descending with ties kept in training-pair enumeration order."""

    pair: tuple[int, int]
    scores: np.ndarray
    supports_first: np.ndarray  # True where the entry supports i over j

    def __len__(self) -> int:
        return self.scores.shape[0]


@dataclass(frozen=True)
class ComparisonMatrix:
    """Counts c[i, j] of transferred preferences supporting i over j."""

    counts: np.ndarray
    k_effective: int

    @property
    def n(self) -> int:
        return self.counts.shape[0]


def _score_pair(measure, zp, zd, xi, xj):
    # orientation scores over all training pairs at once, averaged over features
    s_ij = proportion_kernel(measure, zp, zd, xi, xj).mean(axis=1)
    s_ji = proportion_kernel(measure, zp, zd, xj, xi).mean(axis=1)
    scores = np.maximum(s_ij, s_ji)
    supports = s_ij > s_ji  # tie counts as support for j over i
    order = np.argsort(-scores, kind="stable")
    return scores[order], supports[order]


def app(store: PreferenceStore, query, measure: ProportionMeasure,
        threads: int = 1) -> list[SupportList]:
    """Analogy-based pairwise preference scoring over all query pairs.

    `query` is a RankingInstance or an (n, d) array of preprocessed
    objects. Every training pair is scored exactly once per query pair
    and orientation; no subsampling.
    """
    values = query.values if isinstance(query, RankingInstance) else np.asarray(query, float)
    n = values.shape[0]
    if n < 2:
        raise ValueError("query needs at least 2 objects")
    if len(store) == 0:
        raise ValueError("empty preference store")
    if np.any(values < 0.0) or np.any(values > 1.0):
        raise ValueError("query objects must be preprocessed into [0, 1]")
    if np.any(store.preferred < 0.0) or np.any(store.preferred > 1.0) \
            or np.any(store.dispreferred < 0.0) or np.any(store.dispreferred > 1.0):
        raise ValueError("training pairs must be preprocessed into [0, 1]")

    zp, zd = store.preferred, store.dispreferred
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]

    def work(pair):
        i, j = pair
        scores, supports = _score_pair(measure, zp, zd, values[i], values[j])
        return SupportList((i, j), scores, supports)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(work, pairs))
    return [work(pair) for pair in pairs]


def top_k_stable(scores: np.ndarray, k: int) -> np.ndarray:
    """Indices of the k largest scores, in the order a stable descending
    sort would list them (ties resolved by ascending index).

    Uses a bounded partial selection rather than sorting the whole array.
    """
    m = scores.shape[0]
    k = min(k, m)
    if k == m:
        return np.argsort(-scores, kind="stable")
    part = np.argpartition(-scores, k - 1)[:k]
    threshold = scores[part].min()
    # argpartition may pick arbitrary tie members at the boundary; rebuild
    # the selection so ties fill in ascending-index order
    above = np.flatnonzero(scores > threshold)
    at = np.flatnonzero(scores == threshold)[: k - above.size]
    chosen = np.concatenate([above, at])
    return chosen[np.argsort(-scores[chosen], kind="stable")]


def comparison_matrix(lists: list[SupportList], n: int, k: int) -> ComparisonMatrix:
    """Count supporting preferences among the top-k scores of each list.

    k is clamped to the list length; c[i, j] + c[j, i] = k_effective for
    every pair.
    """
    if k <= 0:
        raise ValueError("k must be positive")
    counts = np.zeros((n, n), dtype=np.int64)
    k_eff = 0
    for sl in lists:
        i, j = sl.pair
        k_eff = min(k, len(sl))
        top = sl.supports_first[:k_eff]  # entries are pre-sorted
        wins_i = int(top.sum())
        counts[i, j] += wins_i
        counts[j, i] += k_eff - wins_i
    return ComparisonMatrix(counts, k_eff)


def dump_support_lists(lists: list[SupportList], path: str | Path) -> None:
    """Write support lists to CSV for debugging."""
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("pair_i,pair_j,rank_in_list,score,supports_i\n")
        for sl in lists:
            i, j = sl.pair
            for r, (score, sup) in enumerate(zip(sl.scores, sl.supports_first), 1):
                fh.write(f"{i},{j},{r},{score:.12g},{int(sup)}\n")
