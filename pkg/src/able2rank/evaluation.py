"""Ranking loss, internal cross-validated grid search, and the
train-to-test experiment runner."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .aggregate import (DEFAULT_MAX_ITER, DEFAULT_SMOOTHING, DEFAULT_TOL,
                        Ranking, able2rank_predict)
from .analogy import ProportionMeasure
from .baseline import err_rank
from .dataset import RankingInstance


def ranking_loss(pi, pi_prime) -> float:
    """Normalized number of inversions between two rankings of the same
    items: the fraction of object pairs ordered discordantly."""
    r1 = pi.ranks if isinstance(pi, Ranking) else np.asarray(pi)
    r2 = pi_prime.ranks if isinstance(pi_prime, Ranking) else np.asarray(pi_prime)
    n = r1.shape[0]
    if r2.shape[0] != n:
        raise ValueError("rankings must have equal length")
    if n < 2:
        raise ValueError("need at least 2 items")
    d1 = r1[:, None] - r1[None, :]
    d2 = r2[:, None] - r2[None, :]
    discordant = int(np.count_nonzero((d1 * d2) < 0)) // 2
    return discordant / (n * (n - 1) // 2)


@dataclass(frozen=True)
class GridSearchResult:
    """Outcome of the internal CV grid search over measures and k."""

    best_measure: ProportionMeasure
    best_k: int
    cv_table: dict

    def cell(self, measure: ProportionMeasure, k: int) -> float:
        return self.cv_table[(str(measure), k)]


@dataclass(frozen=True)
class ExperimentReport:
    name: str
    best_measure: str
    best_k: int
    able2rank_loss: float
    err_loss: float
    svm_loss: float | None = None
    grid: GridSearchResult | None = None
    runtime: dict = field(default_factory=dict)

    def to_text(self) -> str:
        lines = [
            f"experiment      {self.name}",
            f"selected v*     {self.best_measure}",
            f"selected k*     {self.best_k}",
            f"able2rank d_RL  {self.able2rank_loss:.3f}",
            f"err d_RL        {self.err_loss:.3f}",
            f"svm d_RL        {'' if self.svm_loss is None else f'{self.svm_loss:.3f}'}",
        ]
        for phase, secs in self.runtime.items():
            lines.append(f"time[{phase}]     {secs:.2f}s")
        return "\n".join(lines) + "\n"

    def to_csv(self) -> str:
        svm = "" if self.svm_loss is None else f"{self.svm_loss:.3f}"
        return ("experiment,v_star,k_star,able2rank,err,svm\n"
                f"{self.name},{self.best_measure},{self.best_k},"
                f"{self.able2rank_loss:.3f},{self.err_loss:.3f},{svm}\n")


def _split_objects(n: int, rng: np.random.Generator) -> tuple[list, list]:
    perm = rng.permutation(n)
    half = n // 2
    return sorted(perm[:half].tolist()), sorted(perm[half:].tolist())


def grid_search_cv(train: RankingInstance | Sequence[RankingInstance],
                   measures: Sequence[ProportionMeasure],
                   ks: Sequence[int], folds: int = 2, repeats: int = 5,
                   seed: int = 42, smoothing: float = DEFAULT_SMOOTHING,
                   threads: int = 1) -> GridSearchResult:
    """Select (v*, k*) by repeated internal 2-fold cross validation.

    Per repeat, the training objects are partitioned at random into two
    folds inheriting the induced sub-rankings; every (measure, k) cell is
    scored in both fold orientations and averaged over folds x repeats.
    Ties go to the smaller k, then to the earlier measure. Partitions
    depend on (seed, repeat) only, so results are reproducible regardless
    of evaluation order.
    """
    if folds != 2:
        raise ValueError("only 2-fold internal CV is supported")
    instances = [train] if isinstance(train, RankingInstance) else list(train)
    splits = []
    if len(instances) == 1:
        inst = instances[0]
        if inst.n < 4:
            raise ValueError("need at least 4 training objects for 2-fold CV")
        for rep in range(repeats):
            rng = np.random.default_rng([seed, rep])
            fold_a, fold_b = _split_objects(inst.n, rng)
            a, b = inst.subset(fold_a), inst.subset(fold_b)
            splits.append((a, b))
            splits.append((b, a))
    else:
        # several training rankings: whole instances alternate between folds
        for rep in range(repeats):
            rng = np.random.default_rng([seed, rep])
            order = rng.permutation(len(instances))
            a = [instances[i] for i in order[0::2]]
            b = [instances[i] for i in order[1::2]]
            if not a or not b:
                raise ValueError("need at least 2 training instances")
            splits.append((a, b))
            splits.append((b, a))

    cv_table = {}
    for measure in measures:
        for k in ks:
            losses = []
            for fit_part, val_part in splits:
                val_list = val_part if isinstance(val_part, list) else [val_part]
                for val in val_list:
                    pred = able2rank_predict(fit_part, val, measure, k,
                                             smoothing=smoothing, threads=threads)
                    losses.append(ranking_loss(pred, Ranking.identity(val.n)))
            cv_table[(str(measure), k)] = float(np.mean(losses))

    best = None
    for measure in measures:
        for k in sorted(ks):
            score = cv_table[(str(measure), k)]
            if best is None or score < best[0]:
                best = (score, k, measure)
    _, best_k, best_measure = best
    return GridSearchResult(best_measure, best_k, cv_table)


def run_experiment(train: RankingInstance | Sequence[RankingInstance],
                   test: RankingInstance,
                   measures: Sequence[ProportionMeasure],
                   ks: Sequence[int], seed: int = 42,
                   tol: float = DEFAULT_TOL, max_iter: int = DEFAULT_MAX_ITER,
                   smoothing: float = DEFAULT_SMOOTHING, repeats: int = 5,
                   threads: int = 1) -> ExperimentReport:
    """One train-to-test experiment: grid search on the training data,
    refit on all of it, evaluate able2rank and ERR on the test ranking."""
    instances = [train] if isinstance(train, RankingInstance) else list(train)
    train_name = "+".join(inst.name for inst in instances)
    name = f"{train_name} -> {test.name}"
    runtime = {}

    t0 = time.perf_counter()
    if len(measures) == 1 and len(ks) == 1:
        grid = GridSearchResult(measures[0], ks[0],
                                {(str(measures[0]), ks[0]): float("nan")})
    else:
        grid = grid_search_cv(instances, measures, ks, repeats=repeats,
                              seed=seed, smoothing=smoothing, threads=threads)
    runtime["grid-search"] = time.perf_counter() - t0

    truth = Ranking.identity(test.n)
    t0 = time.perf_counter()
    pred = able2rank_predict(instances, test, grid.best_measure, grid.best_k,
                             tol=tol, max_iter=max_iter, smoothing=smoothing,
                             threads=threads)
    able_loss = ranking_loss(pred, truth)
    runtime["able2rank"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    err_loss = ranking_loss(err_rank(instances, test), truth)
    runtime["err"] = time.perf_counter() - t0

    return ExperimentReport(name, str(grid.best_measure), grid.best_k,
                            able_loss, err_loss, grid=grid, runtime=runtime)
