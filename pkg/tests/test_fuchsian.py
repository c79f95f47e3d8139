from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from equisym import (
    EXTENSION_TABLE,
    ExtensionRule,
    InvariantError,
    Signature,
    candidate_signatures,
    format_signature,
    normalized_area,
    parse_signature,
    possible_extensions,
    rh_genus,
    teich_dim,
)


class TestSignature:
    def test_periods_are_sorted(self):
        assert Signature(0, (4, 2, 2, 4)).periods == (2, 2, 4, 4)

    def test_validation(self):
        with pytest.raises(ValueError):
            Signature(-1, (2,))
        with pytest.raises(ValueError):
            Signature(0, (1, 2))

    def test_format_parse_round_trip(self):
        for text in ("0;2,2,4,4", "1;2", "2;-", "0;2,8,8", "3;-"):
            sig = parse_signature(text)
            assert format_signature(sig) == text
            assert str(sig) == text

    def test_parse_accepts_empty_period_tail(self):
        assert parse_signature("2;") == Signature(2, ())
        assert parse_signature("2;-") == Signature(2, ())

    def test_parse_rejects_garbage(self):
        for text in ("x;2", "0;1,2", "-1;2", "0", "0;2,,4"):
            with pytest.raises(ValueError):
                parse_signature(text)

    @given(
        st.integers(min_value=0, max_value=4),
        st.lists(st.integers(min_value=2, max_value=9), max_size=6),
    )
    def test_round_trip_property(self, h, periods):
        sig = Signature(h, tuple(periods))
        assert parse_signature(format_signature(sig)) == sig
        assert sig == Signature(h, tuple(reversed(sorted(periods))))


class TestAreaAndDimension:
    def test_known_areas(self):
        assert normalized_area(parse_signature("0;2,2,2,2,2")) == Fraction(1, 2)
        assert normalized_area(parse_signature("1;2")) == Fraction(1, 2)
        assert normalized_area(parse_signature("0;2,2,4,4")) == Fraction(1, 2)
        assert normalized_area(parse_signature("0;2,8,8")) == Fraction(1, 4)
        assert normalized_area(parse_signature("0;2,6,6")) == Fraction(1, 6)
        assert normalized_area(parse_signature("2;-")) == 2

    def test_known_dimensions(self):
        assert teich_dim(parse_signature("0;2,2,2,2,2")) == 2
        assert teich_dim(parse_signature("0;2,2,4,4")) == 1
        assert teich_dim(parse_signature("1;2")) == 1
        assert teich_dim(parse_signature("0;2,8,8")) == 0
        assert teich_dim(parse_signature("2;-")) == 3

    def test_negative_dimension_rejected(self):
        with pytest.raises(ValueError):
            teich_dim(Signature(0, (2, 2)))

    def test_genus_from_area(self):
        assert rh_genus(parse_signature("0;2,2,2,2,2"), 44) == 12
        assert rh_genus(parse_signature("0;2,2,4,4"), 52) == 14
        assert rh_genus(parse_signature("1;2"), 40) == 11
        assert rh_genus(parse_signature("0;2,8,8"), 136) == 18
        assert rh_genus(parse_signature("0;2,6,6"), 84) == 8

    def test_non_integral_genus_rejected(self):
        with pytest.raises(InvariantError):
            rh_genus(parse_signature("0;2,2,2,2,2"), 42)

    @given(
        st.integers(min_value=0, max_value=3),
        st.lists(st.integers(min_value=2, max_value=8), max_size=5),
    )
    def test_area_formula(self, h, periods):
        sig = Signature(h, tuple(periods))
        manual = Fraction(2 * h - 2) + sum(Fraction(m - 1, m) for m in periods)
        assert normalized_area(sig) == manual


class TestCandidateSignatures:
    def test_full_order_set_at_q11(self):
        got = candidate_signatures({1, 2, 4, 11, 22, 44}, 44, 12)
        assert {str(s) for s in got} == {"1;2", "0;2,2,4,4", "0;2,2,2,2,2"}

    def test_without_order_four(self):
        got = candidate_signatures({1, 2, 11, 22}, 44, 12)
        assert {str(s) for s in got} == {"1;2", "0;2,2,2,2,2"}

    def test_full_order_set_at_q7(self):
        got = candidate_signatures({1, 2, 4, 7, 14, 28}, 28, 8)
        assert {str(s) for s in got} == {"1;2", "0;2,2,4,4", "0;2,2,2,2,2"}

    def test_all_candidates_have_the_right_genus(self):
        for sig in candidate_signatures({1, 2, 4, 13, 26, 52}, 52, 14):
            assert rh_genus(sig, 52) == 14
            assert all(m in {2, 4, 13, 26, 52} for m in sig.periods)


class TestExtensions:
    def test_table_contents(self):
        expected = {
            "1;2": {("0;2,2,2,4", 2)},
            "1;3": {("0;2,2,2,6", 2)},
            "0;2,2,4,4": {("0;2,2,2,4", 2)},
            "0;3,3,3,3": {("0;2,2,2,3", 4), ("0;2,2,3,3", 2)},
            "0;2,2,2,2,2": set(),
            "2;-": {("0;2,2,2,2,2,2", 2)},
            "0;2,8,8": set(),
        }
        for text, want in expected.items():
            rules = possible_extensions(parse_signature(text))
            assert {(str(r.outer), r.index) for r in rules} == want

    def test_every_rule_preserves_area_ratio_and_dimension(self):
        for t in range(2, 12):
            for _, fn in EXTENSION_TABLE:
                for sig in (Signature(1, (t,)), Signature(0, (t, t, t, t)), Signature(2, ())):
                    rule = fn(sig)
                    if rule is None:
                        continue
                    assert normalized_area(rule.inner) == rule.index * normalized_area(rule.outer)
                    assert teich_dim(rule.inner) == teich_dim(rule.outer)

    def test_rule_validation(self):
        with pytest.raises(InvariantError):
            ExtensionRule(Signature(0, (3, 3, 3, 3)), Signature(0, (2, 2, 2, 3)), 2)
        with pytest.raises(InvariantError):
            ExtensionRule(Signature(1, (2,)), Signature(0, (2, 2, 2, 4)), 1)

    def test_non_hyperbolic_rejected(self):
        with pytest.raises(ValueError):
            possible_extensions(parse_signature("0;2,2,2"))
        with pytest.raises(ValueError):
            possible_extensions(parse_signature("1;-"))
