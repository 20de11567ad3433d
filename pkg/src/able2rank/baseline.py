"""Expected rank regression (ERR): pointwise least-squares baseline.

Each training object gets a normalized expected-rank target, a linear
model is fit by ordinary least squares, and queries are ranked by
ascending predicted target.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .aggregate import Ranking
from .dataset import RankingInstance
from .preprocess import standardize_for_baseline


@dataclass(frozen=True)
class LinearModel:
    weights: np.ndarray
    intercept: float

    def predict(self, X: np.ndarray) -> np.ndarray:
        return X @ self.weights + self.intercept


def err_targets(instance: RankingInstance) -> np.ndarray:
    """Expected normalized rank r/(n+1) for the object at rank position r."""
    n = instance.n
    return np.arange(1, n + 1) / (n + 1)


def err_fit(X: np.ndarray, y: np.ndarray) -> LinearModel:
    """OLS with intercept; rank-deficient designs get the minimum-norm
    solution."""
    X = np.asarray(X, dtype=float)
    y = np.asarray(y, dtype=float)
    if X.ndim != 2 or X.shape[0] < 1:
        raise ValueError("need at least one training point")
    design = np.hstack([X, np.ones((X.shape[0], 1))])
    coef, *_ = np.linalg.lstsq(design, y, rcond=None)
    return LinearModel(coef[:-1], float(coef[-1]))


def err_predict(model: LinearModel, X: np.ndarray) -> Ranking:
    """Rank query objects by ascending predicted expected rank; ties by
    ascending index."""
    preds = model.predict(np.asarray(X, dtype=float))
    return Ranking(np.argsort(preds, kind="stable"))


def err_rank(train: RankingInstance | Sequence[RankingInstance],
             query: RankingInstance | np.ndarray) -> Ranking:
    """Standardize with training statistics, fit ERR on the pooled
    training objects, and rank the query set."""
    instances = [train] if isinstance(train, RankingInstance) else list(train)
    X_train = np.vstack([inst.values for inst in instances])
    y_train = np.concatenate([err_targets(inst) for inst in instances])
    X_query = query.values if isinstance(query, RankingInstance) else np.asarray(query, float)
    X_train_std, X_query_std, _ = standardize_for_baseline(X_train, X_query)
    model = err_fit(X_train_std, y_train)
    return err_predict(model, X_query_std)
