"""Fuzzy-triple arithmetic, defuzzification, and the linguistic scale."""

from __future__ import annotations

import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from fuzzy_dematel import (
    INFLUENCE_SCALE,
    LinguisticScale,
    ScaleEntry,
    TFN,
    TriangularFuzzyNumber,
    UnknownTermError,
    defuzzify,
    fuzzify,
    subtract_components,
)

bounded = st.floats(min_value=-100.0, max_value=100.0, allow_nan=False)


@st.composite
def triples(draw):
    values = sorted(draw(st.tuples(bounded, bounded, bounded)))
    return TFN(*values)


class TestTriangularFuzzyNumber:
    def test_alias(self):
        assert TFN is TriangularFuzzyNumber

    def test_ordering_enforced(self):
        TFN(0.1, 0.2, 0.3)
        TFN(0.5, 0.5, 0.5)
        with pytest.raises(ValueError, match="l <= m <= u"):
            TFN(0.3, 0.2, 0.1)
        with pytest.raises(ValueError, match="l <= m <= u"):
            TFN(0.0, 0.4, 0.3)

    def test_rejects_non_finite(self):
        with pytest.raises(ValueError, match="finite"):
            TFN(0.0, 0.1, math.inf)
        with pytest.raises(ValueError, match="finite"):
            TFN(math.nan, 0.1, 0.2)

    def test_frozen(self):
        a = TFN(0.1, 0.2, 0.3)
        with pytest.raises(AttributeError):
            a.m = 0.5

    def test_add_componentwise(self):
        got = TFN(0.1, 0.2, 0.3) + TFN(0.4, 0.5, 0.6)
        assert got.as_tuple() == pytest.approx((0.5, 0.7, 0.9))

    def test_add_rejects_plain_tuple(self):
        with pytest.raises(TypeError):
            TFN(0.1, 0.2, 0.3) + (0.4, 0.5, 0.6)

    def test_divide_componentwise(self):
        assert (TFN(0.2, 0.4, 0.6) / 2.0) == TFN(0.1, 0.2, 0.3)

    def test_divide_requires_positive_scalar(self):
        with pytest.raises(ValueError, match="positive"):
            TFN(0.1, 0.2, 0.3) / 0.0
        with pytest.raises(ValueError, match="positive"):
            TFN(0.1, 0.2, 0.3) / -1.5

    def test_iter_and_as_tuple(self):
        a = TFN(0.1, 0.2, 0.3)
        assert tuple(a) == (0.1, 0.2, 0.3)
        assert a.as_tuple() == (0.1, 0.2, 0.3)
        l, m, u = a
        assert (l, m, u) == (0.1, 0.2, 0.3)

    @given(triples(), triples())
    def test_add_preserves_ordering(self, a, b):
        c = a + b
        assert c.l <= c.m <= c.u

    @given(triples(), st.floats(min_value=0.1, max_value=100.0))
    def test_divide_preserves_ordering(self, a, s):
        c = a / s
        assert c.l <= c.m <= c.u


class TestSubtractComponents:
    def test_plain_signed_triple(self):
        got = subtract_components(TFN(0.1, 0.2, 0.3), TFN(0.3, 0.4, 0.5))
        assert got == pytest.approx((-0.2, -0.2, -0.2))
        assert isinstance(got, tuple)

    def test_result_may_violate_ordering(self):
        # A wide minus a narrow triple flips the ends; the raw triple keeps that.
        got = subtract_components(TFN(0.0, 0.5, 1.0), TFN(0.4, 0.5, 0.6))
        assert got == pytest.approx((-0.4, 0.0, 0.4))

    def test_accepts_sequences(self):
        assert subtract_components((1, 2, 3), (0.5, 0.5, 0.5)) == pytest.approx(
            (0.5, 1.5, 2.5)
        )

    @given(triples(), triples())
    def test_matches_componentwise_arithmetic(self, a, b):
        got = subtract_components(a, b)
        assert got == (a.l - b.l, a.m - b.m, a.u - b.u)


class TestDefuzzify:
    def test_graded_mean_formula(self):
        assert defuzzify(TFN(0.0, 0.0, 0.0)) == 0.0
        assert defuzzify(TFN(1.0, 1.0, 1.0)) == 1.0
        assert defuzzify((0.2, 0.3, 0.4)) == pytest.approx(0.3)

    def test_dispatch_vector_example(self):
        # A fuzzy dispatch score and its published crisp value.
        assert defuzzify(TFN(0.761, 1.236, 2.1)) == pytest.approx(1.333, abs=5e-4)

    def test_signed_triple_example(self):
        # Net-relation triples are defuzzified on the same rule.
        assert defuzzify((-0.342, -0.452, -0.687)) == pytest.approx(-0.483, abs=5e-4)

    @given(triples(), triples())
    def test_linear_under_addition(self, a, b):
        assert defuzzify(a + b) == pytest.approx(
            defuzzify(a) + defuzzify(b), abs=1e-12
        )

    @given(triples(), st.floats(min_value=0.1, max_value=100.0))
    def test_linear_under_scaling(self, a, s):
        assert defuzzify(a / s) == pytest.approx(defuzzify(a) / s, abs=1e-10)

    @given(triples())
    def test_value_inside_support(self, a):
        v = defuzzify(a)
        assert a.l - 1e-12 <= v <= a.u + 1e-12


class TestInfluenceScale:
    def test_eleven_levels(self):
        assert len(INFLUENCE_SCALE) == 11
        assert INFLUENCE_SCALE.max_level == 10

    def test_endpoints(self):
        assert INFLUENCE_SCALE.fuzzify(0) == TFN(0.0, 0.0, 0.0)
        assert INFLUENCE_SCALE.fuzzify(10) == TFN(0.8, 0.9, 1.0)

    def test_token_table(self):
        expected = {
            "NI": (0.0, 0.0, 0.0),
            "ELI": (0.0, 0.0, 0.1),
            "VLI": (0.0, 0.1, 0.2),
            "MLI": (0.1, 0.2, 0.3),
            "LI": (0.2, 0.3, 0.4),
            "MI": (0.3, 0.4, 0.5),
            "HI": (0.4, 0.5, 0.6),
            "MHI": (0.5, 0.6, 0.7),
            "VHI": (0.6, 0.7, 0.8),
            "EHI": (0.7, 0.8, 0.9),
            "VELI": (0.8, 0.9, 1.0),
        }
        for token, triple in expected.items():
            assert INFLUENCE_SCALE.fuzzify(token).as_tuple() == pytest.approx(triple)

    def test_tokens_and_levels_agree(self):
        for entry in INFLUENCE_SCALE:
            assert INFLUENCE_SCALE.fuzzify(entry.token) == INFLUENCE_SCALE.fuzzify(
                entry.level
            )

    def test_lookup_is_case_insensitive_and_trims(self):
        assert INFLUENCE_SCALE.entry("mi").level == 5
        assert INFLUENCE_SCALE.entry("  Hi ").level == 6

    def test_crisp_sequence(self):
        # Defuzzified scale values: 0, 0.025, then 0.1 through 0.9 in tenths.
        crisp = [defuzzify(e.value) for e in INFLUENCE_SCALE]
        expected = [0.0, 0.025, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9]
        assert crisp == pytest.approx(expected, abs=1e-12)

    def test_strictly_increasing(self):
        crisp = [defuzzify(e.value) for e in INFLUENCE_SCALE]
        assert all(a < b for a, b in zip(crisp, crisp[1:]))

    def test_unknown_token(self):
        with pytest.raises(UnknownTermError, match="unknown judgment token 'XX'"):
            INFLUENCE_SCALE.entry("XX")

    def test_unknown_level(self):
        with pytest.raises(UnknownTermError, match="0..10"):
            INFLUENCE_SCALE.entry(11)
        with pytest.raises(UnknownTermError):
            INFLUENCE_SCALE.entry(-1)

    def test_bool_is_not_a_level(self):
        with pytest.raises(UnknownTermError):
            INFLUENCE_SCALE.entry(True)

    def test_module_level_fuzzify_uses_default_scale(self):
        assert fuzzify("HI") == INFLUENCE_SCALE.fuzzify("HI")
        assert fuzzify(3) == INFLUENCE_SCALE.fuzzify(3)


class TestLinguisticScaleValidation:
    def test_levels_must_be_contiguous(self):
        with pytest.raises(ValueError, match="levels must run"):
            LinguisticScale(
                [
                    ScaleEntry("A", 0, "a", TFN(0, 0, 0)),
                    ScaleEntry("B", 2, "b", TFN(0, 0, 0.1)),
                ]
            )

    def test_tokens_unique_case_insensitively(self):
        with pytest.raises(ValueError, match="duplicate"):
            LinguisticScale(
                [
                    ScaleEntry("A", 0, "a", TFN(0, 0, 0)),
                    ScaleEntry("a", 1, "also a", TFN(0, 0, 0.1)),
                ]
            )

    def test_empty_scale_rejected(self):
        with pytest.raises(ValueError, match="at least one"):
            LinguisticScale([])
