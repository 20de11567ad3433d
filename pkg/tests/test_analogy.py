import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from able2rank.analogy import (VARIANTS, ProportionMeasure, boolean_proportion,
                               parse_measures, scalar_proportion,
                               vector_proportion)

unit = st.floats(min_value=0.0, max_value=1.0, allow_nan=False)

SIX_PATTERNS = {
    (0, 0, 0, 0), (0, 0, 1, 1), (0, 1, 0, 1),
    (1, 0, 1, 0), (1, 1, 0, 0), (1, 1, 1, 1),
}


def all_measures():
    return [ProportionMeasure(v) for v in VARIANTS]


class TestBooleanProportion:
    def test_exact_table(self):
        for p in itertools.product((0, 1), repeat=4):
            assert boolean_proportion(*p) == int(p in SIX_PATTERNS)

    def test_matches_implication_formula(self):
        imp = lambda x, y: int(not x or y)
        for a, b, c, d in itertools.product((0, 1), repeat=4):
            direct = int(imp(a, b) == imp(c, d) and imp(b, a) == imp(d, c))
            assert boolean_proportion(a, b, c, d) == direct

    def test_central_permutation(self):
        for a, b, c, d in itertools.product((0, 1), repeat=4):
            assert boolean_proportion(a, b, c, d) == boolean_proportion(a, c, b, d)

    def test_rejects_non_bits(self):
        with pytest.raises(ValueError):
            boolean_proportion(0, 1, 0.5, 1)


class TestMeasureConstruction:
    def test_unknown_variant(self):
        with pytest.raises(ValueError):
            ProportionMeasure("Z")

    @pytest.mark.parametrize("eps", [0.0, -0.1, 1.5])
    def test_epsilon_out_of_range(self, eps):
        with pytest.raises(ValueError):
            ProportionMeasure("AE", eps)

    def test_parse_with_epsilon(self):
        m = ProportionMeasure.parse("AE-graded:eps=0.25")
        assert m.variant == "AE-graded"
        assert m.epsilon == 0.25

    def test_parse_measure_list(self):
        ms = parse_measures("A,MM,AE:eps=0.2")
        assert [m.variant for m in ms] == ["A", "MM", "AE"]
        assert ms[2].epsilon == 0.2

    def test_str_roundtrip(self):
        for m in all_measures():
            assert ProportionMeasure.parse(str(m)) == m


class TestArithmetic:
    def test_equal_differences(self):
        m = ProportionMeasure("A")
        assert scalar_proportion(m, 0.8, 0.6, 0.5, 0.3) == pytest.approx(1.0)

    def test_opposite_signs_use_max_branch(self):
        m = ProportionMeasure("A")
        # a-b = 0.3, c-d = -0.1: 1 - max(0.3, 0.1)
        assert scalar_proportion(m, 0.5, 0.2, 0.3, 0.4) == pytest.approx(0.7)

    def test_zero_difference_vs_nonzero_is_unequal_sign(self):
        m = ProportionMeasure("A")
        # a-b = 0, c-d = 0.4: sign 0 != sign +, so 1 - max(0, 0.4)
        assert scalar_proportion(m, 0.5, 0.5, 0.9, 0.5) == pytest.approx(0.6)

    def test_strict_variant_zero_on_sign_mismatch(self):
        m = ProportionMeasure("A-strict")
        assert scalar_proportion(m, 0.5, 0.2, 0.3, 0.4) == 0.0

    def test_strict_variant_equals_plain_on_equal_signs(self):
        m_plain, m_strict = ProportionMeasure("A"), ProportionMeasure("A-strict")
        assert scalar_proportion(m_strict, 0.9, 0.4, 0.7, 0.1) == \
            scalar_proportion(m_plain, 0.9, 0.4, 0.7, 0.1)

    def test_same_direction_partial(self):
        m = ProportionMeasure("A")
        # both positive: 1 - |0.5 - 0.6|
        assert scalar_proportion(m, 0.9, 0.4, 0.7, 0.1) == pytest.approx(0.9)


class TestGeometric:
    def test_equal_products(self):
        m = ProportionMeasure("G")
        assert scalar_proportion(m, 0.4, 0.2, 0.2, 0.1) == pytest.approx(1.0)

    def test_ratio(self):
        m = ProportionMeasure("G")
        # ad = 0.08, bc = 0.09, same positive direction
        assert scalar_proportion(m, 0.4, 0.3, 0.3, 0.2) == pytest.approx(0.08 / 0.09)

    def test_zero_products_give_zero(self):
        m = ProportionMeasure("G")
        assert scalar_proportion(m, 0.0, 0.0, 0.0, 0.0) == 0.0

    def test_sign_mismatch_gives_zero(self):
        m = ProportionMeasure("G")
        assert scalar_proportion(m, 0.6, 0.2, 0.2, 0.6) == 0.0


class TestMinMax:
    def test_boolean_row(self):
        m = ProportionMeasure("MM")
        assert scalar_proportion(m, 1.0, 1.0, 0.0, 0.0) == pytest.approx(1.0)

    def test_direct_formula(self):
        m = ProportionMeasure("MM")
        # min(a,d)=0.2, min(b,c)=0.4, max(a,d)=0.8, max(b,c)=0.5
        expected = 1.0 - max(abs(0.2 - 0.4), abs(0.8 - 0.5))
        assert scalar_proportion(m, 0.8, 0.4, 0.5, 0.2) == pytest.approx(expected)

    def test_swap_outer_pair_invariant(self):
        m = ProportionMeasure("MM")
        assert scalar_proportion(m, 0.8, 0.4, 0.5, 0.2) == \
            scalar_proportion(m, 0.2, 0.4, 0.5, 0.8)


class TestApproximateEquality:
    def test_pairwise_equal_within_any_epsilon(self):
        m = ProportionMeasure("AE", 0.1)
        assert scalar_proportion(m, 0.5, 0.5, 0.9, 0.9) == 1.0

    def test_cross_pairing(self):
        m = ProportionMeasure("AE", 0.1)
        # a~c and b~d within epsilon, a!~b
        assert scalar_proportion(m, 0.2, 0.8, 0.25, 0.75) == 1.0

    def test_outside_epsilon(self):
        m = ProportionMeasure("AE", 0.1)
        assert scalar_proportion(m, 0.0, 0.5, 0.9, 0.3) == 0.0

    def test_graded_partial_credit(self):
        m = ProportionMeasure("AE-graded", 0.5)
        # |a-b| = 0.2 -> 0.6; |c-d| = 0.1 -> 0.8; cross terms worse
        assert scalar_proportion(m, 0.2, 0.4, 0.9, 1.0) == pytest.approx(0.6 * 0.8)

    def test_graded_positive_where_indicator_is_one(self):
        rng = np.random.default_rng(5)
        eps = 0.15
        hard = ProportionMeasure("AE", eps)
        soft = ProportionMeasure("AE-graded", eps)
        for a, b, c, d in rng.random((200, 4)):
            if scalar_proportion(hard, a, b, c, d) == 1.0:
                assert scalar_proportion(soft, a, b, c, d) > 0.0


class TestSharedProperties:
    @pytest.mark.parametrize("variant", VARIANTS)
    def test_range(self, variant):
        m = ProportionMeasure(variant)
        rng = np.random.default_rng(17)
        for a, b, c, d in rng.random((500, 4)):
            v = scalar_proportion(m, a, b, c, d)
            assert 0.0 <= v <= 1.0

    @pytest.mark.parametrize("variant", VARIANTS)
    def test_boolean_endpoints_in_range(self, variant):
        m = ProportionMeasure(variant)
        for p in itertools.product((0.0, 1.0), repeat=4):
            assert 0.0 <= scalar_proportion(m, *p) <= 1.0

    @pytest.mark.parametrize("variant", ["A", "A-strict", "MM"])
    def test_boolean_reduction(self, variant):
        m = ProportionMeasure(variant)
        for p in itertools.product((0, 1), repeat=4):
            assert scalar_proportion(m, *p) == boolean_proportion(*p)

    @given(a=unit, b=unit, c=unit, d=unit)
    @settings(max_examples=300)
    def test_symmetry_hypothesis(self, a, b, c, d):
        for m in all_measures():
            assert scalar_proportion(m, a, b, c, d) == scalar_proportion(m, c, d, a, b)

    @given(a=unit, b=unit)
    @settings(max_examples=300)
    def test_reflexivity_hypothesis(self, a, b):
        for m in all_measures():
            if m.variant == "G" and a * b == 0.0:
                continue
            assert scalar_proportion(m, a, b, a, b) == pytest.approx(1.0, abs=1e-12)

    def test_rejects_out_of_range_input(self):
        with pytest.raises(ValueError):
            scalar_proportion(ProportionMeasure("A"), 1.2, 0.0, 0.0, 0.0)


class TestVectorProportion:
    def test_single_coordinate_equals_scalar(self):
        m = ProportionMeasure("A")
        assert vector_proportion(m, [0.8], [0.6], [0.5], [0.3]) == \
            scalar_proportion(m, 0.8, 0.6, 0.5, 0.3)

    def test_mean_of_coordinates(self):
        m = ProportionMeasure("A")
        # coordinate degrees 1.0 and 0.0
        got = vector_proportion(m, [0.5, 0.0], [0.5, 1.0], [0.5, 1.0], [0.5, 0.0])
        assert got == pytest.approx(0.5)

    def test_reflexivity_on_vectors(self):
        rng = np.random.default_rng(2)
        a, b = rng.random((2, 6))
        for variant in ("A", "A-strict", "MM"):
            m = ProportionMeasure(variant)
            assert vector_proportion(m, a, b, a, b) == pytest.approx(1.0)

    def test_min_aggregation_option(self):
        m = ProportionMeasure("A")
        got = vector_proportion(m, [0.5, 0.0], [0.5, 1.0], [0.5, 1.0], [0.5, 0.0],
                                aggregation="min")
        assert got == pytest.approx(0.0)

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            vector_proportion(ProportionMeasure("A"), [0.1], [0.1, 0.2], [0.1], [0.1])
