import numpy as np
import pytest

from able2rank.dataset import Column, FeatureSchema, RankingInstance


def numeric_schema(d: int) -> FeatureSchema:
    return FeatureSchema(tuple(Column(f"f{k}", "numeric") for k in range(d)))


def linear_utility_instance(rng, n: int, d: int, w, name: str) -> RankingInstance:
    """Noiseless ranking data whose normalized rank target is exactly
    linear in the features.

    Objects are ranked by the linear utility u = X @ w; the last feature
    is nudged so the sorted utilities are equally spaced, which makes the
    expected-rank target an affine function of x.
    """
    X = rng.random((n, d))
    u = X @ w
    order = np.argsort(-u, kind="stable")
    X = X[order]
    u = u[order]
    target = (n - np.arange(n)) / (n + 1) * (u.max() - u.min()) + u.min()
    X[:, -1] += (target - u) / w[-1]
    return RankingInstance(X, numeric_schema(d), name)


def monotone_1d_instance(n: int, name: str = "mono") -> RankingInstance:
    """Single strictly decreasing feature: rank order equals feature order."""
    values = np.arange(n, 0, -1, dtype=float)[:, None]
    return RankingInstance(values, numeric_schema(1), name)


@pytest.fixture
def synthetic_split():
    """The fixed-seed train/test split used by the end-to-end checks."""
    rng = np.random.default_rng(7)
    d = 5
    w = rng.random(d) + 0.5
    train = linear_utility_instance(rng, 30, d, w, "train")
    test = linear_utility_instance(rng, 20, d, w, "test")
    return train, test
