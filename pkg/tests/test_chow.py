"""Core arithmetic: series, graded classes, dual/twist, JSON wire forms."""

from fractions import Fraction as F

import pytest

from csmcalc.chow import (
    GradedClass,
    HSeries,
    LineBundleOnPn,
    as_rational,
    format_rational,
    parse_rational,
    tangent_chern,
)
from csmcalc.errors import (
    DimensionMismatchError,
    InputParseError,
    NonUnitError,
    ValidationError,
)


def S(n, *coeffs):
    return HSeries.from_coeffs(n, coeffs)


def C(n, *coeffs):
    return GradedClass.from_coeffs(n, coeffs)


class TestRationalWireForm:
    @pytest.mark.parametrize(
        "text,value",
        [("3/4", F(3, 4)), ("-7", F(-7)), ("0", F(0)), ("10/4", F(5, 2)), ("+2", F(2))],
    )
    def test_parse(self, text, value):
        assert parse_rational(text) == value

    def test_parse_int(self):
        assert parse_rational(-3) == F(-3)

    @pytest.mark.parametrize("bad", ["0.5", "3/-4", "1/0", "abc", "", "1/2/3", 1.5, None, True])
    def test_parse_rejects(self, bad):
        with pytest.raises(InputParseError):
            parse_rational(bad)

    def test_format_round_trip(self):
        for q in [F(3, 4), F(-7), F(0), F(22, 7), F(-5, 3)]:
            assert parse_rational(format_rational(q)) == q

    def test_as_rational_rejects_float(self):
        with pytest.raises(ValidationError):
            as_rational(0.5)


class TestSeriesArithmetic:
    def test_mul_difference_of_squares(self):
        assert S(3, 1, 1) * S(3, 1, -1) == S(3, 1, 0, -1)

    def test_mul_repeated_binomial(self):
        a = S(3, 1, 1)
        assert a * a * a * a == S(3, 1, 4, 6, 4)

    def test_mul_cancels_to_one(self):
        assert S(3, 1, 4) * S(3, 1, -4, 16, -64) == HSeries.one(3)

    def test_mul_truncates(self):
        # H^2 * H^2 vanishes on P^3
        assert S(3, 0, 0, 1) * S(3, 0, 0, 1) == S(3)

    def test_mul_dimension_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            S(3, 1) * S(2, 1)

    def test_scalar_mul(self):
        assert 2 * S(2, 1, 3) == S(2, 2, 6)
        assert S(2, 1, 3) * F(1, 2) == S(2, F(1, 2), F(3, 2))

    def test_invert_geometric(self):
        assert S(3, 1, 4).inverse() == S(3, 1, -4, 16, -64)

    def test_invert_identity(self):
        for n in range(5):
            assert HSeries.one(n).inverse() == HSeries.one(n)

    def test_invert_three_term(self):
        assert S(3, 1, 1, 1).inverse() == S(3, 1, -1, 0, 1)

    def test_invert_non_monic_unit(self):
        a = S(4, 2, -3, F(1, 5), 7, 0)
        assert a * a.inverse() == HSeries.one(4)

    def test_invert_non_unit(self):
        with pytest.raises(NonUnitError):
            S(3, 0, 1).inverse()

    def test_pow_negative(self):
        assert S(3, 1, 1) ** -2 == S(3, 1, -2, 3, -4)

    def test_pow_zero(self):
        assert S(3, 5, 1, 2) ** 0 == HSeries.one(3)

    def test_pow_binomial(self):
        assert S(3, 1, 1) ** 4 == S(3, 1, 4, 6, 4)

    def test_pow_negative_non_unit(self):
        with pytest.raises(NonUnitError):
            S(2, 0, 1) ** -1

    def test_length_validation(self):
        with pytest.raises(ValidationError):
            HSeries(2, (F(1),))


class TestCap:
    def test_identity_operator(self):
        a = C(3, 0, 4, -7, 10)
        assert HSeries.one(3).cap(a) == a

    def test_tangent_cap_polar(self):
        assert (S(3, 1, 1) ** 4).cap(C(3, 0, 4, -7, 10)) == C(3, 0, 4, 9, 6)

    def test_one_plus_divisor_cap(self):
        assert S(3, 1, 4).cap(C(3, 0, 0, 9, -18)) == C(3, 0, 0, 9, 18)

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            S(2, 1).cap(C(3, 1))


class TestDualAndTwist:
    def test_dual_signs(self):
        assert C(3, 0, 4, -7, 10).dual(3) == C(3, 0, -4, -7, -10)

    def test_dual_involution(self):
        a = C(3, 2, 4, -7, 10)
        assert a.dual(3).dual(3) == a
        assert a.dual(5).dual(5) == a

    def test_dual_fixes_top_class(self):
        a = C(4, 1)
        assert a.dual(4) == a

    def test_dual_default_relative_dim(self):
        a = C(3, 1, 2, 3, 4)
        assert a.dual() == a.dual(3)

    def test_twist_example(self):
        got = C(3, 0, -4, -7, -10).twist(LineBundleOnPn(F(4)), 3)
        assert got == C(3, 0, -4, 9, -18)

    def test_twist_trivial_bundle(self):
        a = C(3, 1, 2, 3, 4)
        assert a.twist(LineBundleOnPn(F(0)), 3) == a

    def test_twist_composes(self):
        a = C(3, 0, 5, -2, 7)
        twice = a.twist(LineBundleOnPn(F(2)), 3).twist(LineBundleOnPn(F(3)), 3)
        assert twice == a.twist(LineBundleOnPn(F(5)), 3)

    def test_twist_rational_degree(self):
        # single codim-1 piece: a*(1 + (1/2)H)^(-1)
        got = C(2, 0, 4, 0).twist(LineBundleOnPn(F(1, 2)), 2)
        assert got == C(2, 0, 4, -2)

    def test_twist_relative_dim_below_n(self):
        # dim-1 piece has codim 1 in a surface M: times (1+2H)^(-1)
        got = C(3, 0, 0, 3, 0).twist(LineBundleOnPn(F(2)), 2)
        assert got == C(3, 0, 0, 3, -6)
        # dim-0 piece sits at top degree; truncation leaves it alone
        piece = C(3, 0, 0, 0, 1).twist(LineBundleOnPn(F(3)), 2)
        assert piece == C(3, 0, 0, 0, 1)
        # negative codimension gives a positive (polynomial) power: times 1+3H
        deeper = C(3, 0, 1, 0, 0).twist(LineBundleOnPn(F(3)), 1)
        assert deeper == C(3, 0, 1, 3, 0)


class TestTangentChern:
    @pytest.mark.parametrize(
        "n,coeffs", [(3, (1, 4, 6, 4)), (0, (1,)), (2, (1, 3, 3)), (1, (1, 2))]
    )
    def test_values(self, n, coeffs):
        assert tangent_chern(n) == S(n, *coeffs)

    def test_matches_power(self):
        for n in range(6):
            assert tangent_chern(n) == S(n, 1, 1) ** (n + 1)


class TestGradedClassBasics:
    def test_add_sub_neg(self):
        a, b = C(2, 1, 2, 3), C(2, 0, 1, -1)
        assert a + b == C(2, 1, 3, 2)
        assert a - b == C(2, 1, 1, 4)
        assert -a == C(2, -1, -2, -3)

    def test_scalar(self):
        assert F(1, 2) * C(2, 2, 4, 6) == C(2, 1, 2, 3)

    def test_single_and_zero(self):
        assert GradedClass.single(3, 1, 4) == C(3, 0, 4, 0, 0)
        assert GradedClass.zero(2).is_zero()
        with pytest.raises(ValidationError):
            GradedClass.single(2, 3, 1)

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            C(2, 1) + C(3, 1)

    def test_degree_zero_part(self):
        assert C(3, 0, 4, 0, 24).degree_zero_part() == 24

    def test_point_space(self):
        # n = 0: everything is scalar arithmetic
        a = C(0, 5)
        assert S(0, 3).cap(a) == C(0, 15)
        assert a.dual(0) == a
        assert a.twist(LineBundleOnPn(F(7)), 0) == a


class TestStr:
    def test_graded(self):
        assert str(C(3, 0, 4, -7, 10)) == "4[P^2] - 7[P^1] + 10[P^0]"
        assert str(C(2, 0, 0, 0)) == "0"
        assert str(C(2, -1, 0, F(7, 2))) == "-1[P^2] + 7/2[P^0]"

    def test_series(self):
        assert str(S(3, 1, 4, 6, 4)) == "1 + 4H + 6H^2 + 4H^3"
        assert str(S(2, 1, 0, -1)) == "1 - H^2"
        assert str(S(1, 0, 0)) == "0"


class TestJsonWireForms:
    def test_graded_round_trip(self):
        a = C(3, 0, 4, F(-7, 2), 10)
        assert GradedClass.from_json(a.to_json()) == a

    def test_series_round_trip(self):
        s = S(2, 1, F(1, 3), -2)
        assert HSeries.from_json(s.to_json()) == s

    def test_graded_wire_shape(self):
        assert C(3, 0, 4, -7, 10).to_json() == {
            "ambient_dim": 3,
            "coeffs_by_codim": ["0", "4", "-7", "10"],
        }

    def test_unknown_key_rejected(self):
        with pytest.raises(InputParseError):
            GradedClass.from_json(
                {"ambient_dim": 1, "coeffs_by_codim": ["1", "2"], "extra": 1}
            )

    def test_missing_key_rejected(self):
        with pytest.raises(InputParseError):
            GradedClass.from_json({"ambient_dim": 1})

    def test_length_must_match_dim(self):
        with pytest.raises(InputParseError):
            GradedClass.from_json({"ambient_dim": 2, "coeffs_by_codim": ["1", "2"]})
        with pytest.raises(InputParseError):
            HSeries.from_json({"ambient_dim": 1, "coeffs_by_degree": ["1", "2", "3"]})

    def test_bad_dim_rejected(self):
        with pytest.raises(InputParseError):
            GradedClass.from_json({"ambient_dim": -1, "coeffs_by_codim": []})
        with pytest.raises(InputParseError):
            GradedClass.from_json({"ambient_dim": "3", "coeffs_by_codim": []})

    def test_bad_rational_rejected(self):
        with pytest.raises(InputParseError):
            GradedClass.from_json({"ambient_dim": 0, "coeffs_by_codim": ["1.5"]})
