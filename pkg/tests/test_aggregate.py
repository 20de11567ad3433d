import numpy as np
import pytest

from able2rank.aggregate import (Ranking, able2rank_predict, btl_fit,
                                 rank_from_scores)
from able2rank.analogy import ProportionMeasure
from able2rank.evaluation import ranking_loss

from conftest import linear_utility_instance, monotone_1d_instance, numeric_schema


def expected_counts(theta_star, total=1000):
    n = len(theta_star)
    counts = np.zeros((n, n))
    for i in range(n):
        for j in range(n):
            if i != j:
                counts[i, j] = total * theta_star[i] / (theta_star[i] + theta_star[j])
    return counts


class TestBtlFit:
    def test_two_item_closed_form(self):
        result = btl_fit(np.array([[0, 3], [1, 0]]), smoothing=0.0)
        assert result.converged
        assert result.theta[0] / result.theta[1] == pytest.approx(3.0, abs=1e-6)
        assert result.theta.tolist() == pytest.approx([0.75, 0.25], abs=1e-6)

    def test_symmetric_counts_give_uniform_theta(self):
        counts = np.array([[0, 4, 4], [4, 0, 4], [4, 4, 0]])
        result = btl_fit(counts, smoothing=0.0)
        assert np.allclose(result.theta, 1 / 3, atol=1e-8)

    def test_three_item_recovery(self):
        theta_star = np.array([0.6, 0.3, 0.1])
        result = btl_fit(expected_counts(theta_star), smoothing=0.0)
        assert np.allclose(result.theta, theta_star, atol=1e-3)

    def test_loglik_monotone_nondecreasing(self):
        rng = np.random.default_rng(9)
        counts = rng.integers(0, 20, size=(6, 6)).astype(float)
        np.fill_diagonal(counts, 0)
        result = btl_fit(counts, track_loglik=True)
        trace = np.array(result.loglik_trace)
        assert np.all(np.diff(trace) >= -1e-9)

    def test_theta_normalized(self):
        rng = np.random.default_rng(1)
        counts = rng.integers(0, 9, size=(5, 5)).astype(float)
        np.fill_diagonal(counts, 0)
        result = btl_fit(counts)
        assert result.theta.sum() == pytest.approx(1.0, abs=1e-9)
        assert np.all(result.theta > 0)

    def test_degenerate_all_win_item_converges_with_smoothing(self):
        counts = np.array([[0, 10, 10], [0, 0, 5], [0, 5, 0]])
        result = btl_fit(counts, smoothing=0.1)
        assert result.converged
        assert np.all(np.isfinite(result.theta))

    def test_count_scaling_leaves_ranking_unchanged(self):
        rng = np.random.default_rng(4)
        counts = rng.integers(0, 15, size=(6, 6)).astype(float)
        np.fill_diagonal(counts, 0)
        base = rank_from_scores(btl_fit(counts, smoothing=0.0))
        scaled = rank_from_scores(btl_fit(counts * 7, smoothing=0.0))
        assert np.array_equal(base.order, scaled.order)

    def test_two_item_argmax_consistency(self):
        for c12, c21 in [(5, 2), (2, 5), (9, 1)]:
            counts = np.array([[0, c12], [c21, 0]])
            ranking = rank_from_scores(btl_fit(counts, smoothing=0.1))
            expected_first = 0 if c12 > c21 else 1
            assert ranking.order[0] == expected_first

    def test_rejects_small_or_invalid(self):
        with pytest.raises(ValueError):
            btl_fit(np.zeros((1, 1)))
        with pytest.raises(ValueError):
            btl_fit(np.array([[0, np.inf], [1, 0]]))


class TestRankFromScores:
    def test_descending_sort(self):
        ranking = rank_from_scores(np.array([0.2, 0.5, 0.3]))
        assert ranking.order.tolist() == [1, 2, 0]

    def test_ties_break_by_index(self):
        ranking = rank_from_scores(np.array([0.25, 0.25, 0.25, 0.25]))
        assert ranking.order.tolist() == [0, 1, 2, 3]

    def test_ranks_inverse_of_order(self):
        ranking = rank_from_scores(np.array([0.1, 0.4, 0.2, 0.3]))
        assert np.array_equal(ranking.order[ranking.ranks], np.arange(4))

    def test_from_ranks_roundtrip(self):
        r = Ranking.from_ranks([2, 0, 1])
        assert r.order.tolist() == [1, 2, 0]


class TestAble2RankPredict:
    def test_monotone_1d_self_prediction_is_exact(self):
        inst = monotone_1d_instance(8)
        pred = able2rank_predict(inst, inst, ProportionMeasure("A"), 10)
        assert ranking_loss(pred, Ranking.identity(8)) == 0.0

    def test_two_item_query_follows_count_sign(self):
        train = monotone_1d_instance(5)
        query = np.array([[1.0], [4.0]])  # second object is better
        pred = able2rank_predict(train, query, ProportionMeasure("A"), 10)
        assert pred.order.tolist() == [1, 0]

    def test_synthetic_linear_utility_recovery(self):
        rng = np.random.default_rng(7)
        d = 5
        w = rng.random(d) + 0.5
        train = linear_utility_instance(rng, 30, d, w, "train")
        test = linear_utility_instance(rng, 20, d, w, "test")
        pred = able2rank_predict(train, test, ProportionMeasure("A"), 20)
        assert ranking_loss(pred, Ranking.identity(test.n)) <= 0.05

    def test_multiple_training_instances_pool_pairs(self):
        t1 = monotone_1d_instance(4, "a")
        t2 = monotone_1d_instance(5, "b")
        query = np.array([[3.0], [1.0], [2.0]])
        pred = able2rank_predict([t1, t2], query, ProportionMeasure("A"), 10)
        assert pred.order.tolist() == [0, 2, 1]
