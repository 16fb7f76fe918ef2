"""
Tests for exact scalars and univariate rational functions.

Covers:
  - Rational arithmetic, int coercion, ordering and text form
  - Separation of rational and symbolic field modes
  - Canonical form, formatting and parsing of rational functions
  - Specialisation of rational functions at rational points
  - Field axioms on seeded random samples in both modes
"""

import random

import pytest
from sympy import QQ

from scalars.errors import PoleError, ScalarModeError, ScalarParseError
from scalars.field import FieldMode, Scalar, format_scalar, parse_rational, parse_scalar, scalar_sum
from scalars.ratfunc import ALPHA, POLY_RING, evaluate_at, ratfunc_reduce


# ──────────────────────────────────────────────────────────────────────────
# Shared fixtures
# ──────────────────────────────────────────────────────────────────────────

r = Scalar.rational
a = Scalar.symbol()


def random_rational(rng: random.Random) -> Scalar:
    return r(rng.randint(-9, 9), rng.randint(1, 9))


def random_symbolic(rng: random.Random) -> Scalar:
    numerator = rng.randint(-5, 5) + rng.randint(-5, 5) * a
    denominator = rng.randint(1, 5) + rng.randint(0, 5) * a
    return numerator / denominator


# ──────────────────────────────────────────────────────────────────────────
# Rational scalars
# ──────────────────────────────────────────────────────────────────────────

class TestRationalScalars:
    """Arithmetic and text form of rational scalars."""

    def test_arithmetic_with_int_coercion(self):
        assert r(1, 4) + r(1, 4) == r(1, 2)
        assert r(1, 4) * 4 == 1
        assert 1 - r(1, 4) == r(3, 4)
        assert 2 / r(1, 4) == 8
        assert -r(2, 3) == r(-2, 3)

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            r(1, 2) / 0

    def test_ordering(self):
        values = [r(1, 2), r(-1, 40), r(0), r(3, 8)]
        assert sorted(values) == [r(-1, 40), r(0), r(3, 8), r(1, 2)]

    def test_equal_values_hash_alike(self):
        lookup = {r(1, 2): "half"}
        assert lookup[r(2, 4)] == "half"

    def test_format(self):
        assert format_scalar(r(-3, 6)) == "-1/2"
        assert format_scalar(r(4, 2)) == "2"
        assert str(r(5, 14)) == "5/14"

    def test_parse(self):
        assert parse_rational(" 5 / 14 ") == r(5, 14)
        assert parse_rational("-3") == r(-3)

    @pytest.mark.parametrize("text", ["1/0", "x", "1/2/3", ""])
    def test_parse_rejects_malformed(self, text):
        with pytest.raises(ScalarParseError):
            parse_rational(text)

    def test_parse_error_is_value_error(self):
        with pytest.raises(ValueError):
            parse_rational("1/0")

    def test_scalar_sum(self):
        assert scalar_sum([r(1, 2)] * 4, FieldMode.RATIONAL) == 2
        assert scalar_sum([], FieldMode.RATIONAL).is_zero()


# ──────────────────────────────────────────────────────────────────────────
# Mode separation
# ──────────────────────────────────────────────────────────────────────────

class TestModeSeparation:
    """Rational and symbolic scalars never mix silently."""

    def test_arithmetic_across_modes(self):
        with pytest.raises(ScalarModeError):
            r(1, 2) + a

    def test_comparison_across_modes(self):
        with pytest.raises(ScalarModeError):
            r(1, 2) == Scalar.constant(FieldMode.SYMBOLIC, 1, 2)

    def test_symbolic_values_are_unordered(self):
        with pytest.raises(ScalarModeError):
            a < a + 1


# ──────────────────────────────────────────────────────────────────────────
# Rational functions
# ──────────────────────────────────────────────────────────────────────────

class TestRationalFunctions:
    """Canonical form, text form and specialisation in Q(alpha)."""

    def test_common_factors_cancel(self):
        assert (a * a - 1) / (a - 1) == a + 1

    def test_reduce(self):
        f = ratfunc_reduce(ALPHA**2 - 1, 2 * ALPHA - 2)
        assert f.den == POLY_RING.one
        assert f.num == POLY_RING(QQ(1, 2)) * (ALPHA + 1)

    def test_reduce_zero_denominator(self):
        with pytest.raises(ZeroDivisionError):
            ratfunc_reduce(ALPHA, POLY_RING.zero)

    def test_evaluate_at(self):
        f = ratfunc_reduce(ALPHA, ALPHA + 1)
        assert evaluate_at(f, QQ(1, 4)) == QQ(1, 5)
        with pytest.raises(PoleError):
            evaluate_at(f, -1)

    def test_denominator_is_monic(self):
        x = 1 / (2 + 2 * a)
        assert x.value.den == ALPHA + 1
        assert x.value.num == POLY_RING(QQ(1, 2))

    def test_format_is_integer_normalised(self):
        assert format_scalar(1 / (2 + 2 * a)) == "(1)/(2 + 2*a)"
        assert format_scalar(2 * a / (1 + 2 * a)) == "(2*a)/(1 + 2*a)"
        assert format_scalar(a * a - a) == "-a + a**2"
        assert format_scalar(a) == "a"
        assert format_scalar(a - a) == "0"

    def test_parse_inverts_format(self):
        x = (3 * a - 1) / (4 + a * a)
        assert parse_scalar(format_scalar(x), FieldMode.SYMBOLIC) == x
        assert parse_scalar("(2*a)/(1 + 2*a)", FieldMode.SYMBOLIC) == 2 * a / (1 + 2 * a)
        assert parse_scalar("1/4", FieldMode.SYMBOLIC) == Scalar.constant(FieldMode.SYMBOLIC, 1, 4)

    @pytest.mark.parametrize("text", ["(1)/(0)", "(a", "b + 1"])
    def test_parse_rejects_malformed(self, text):
        with pytest.raises(ScalarParseError):
            parse_scalar(text, FieldMode.SYMBOLIC)

    def test_specialise(self):
        assert (a / (1 + a)).specialise(r(1, 4)) == r(1, 5)
        assert r(3, 7).specialise(r(1, 4)) == r(3, 7)

    def test_specialise_at_pole(self):
        with pytest.raises(PoleError):
            (1 / (1 - a)).specialise(1)

    def test_constants(self):
        x = a / a
        assert x.is_rational_constant()
        assert x.to_rational() == r(1)
        assert not a.is_rational_constant()


# ──────────────────────────────────────────────────────────────────────────
# Field axioms
# ──────────────────────────────────────────────────────────────────────────

class TestFieldAxioms:
    """Seeded random samples in both modes."""

    @pytest.mark.parametrize("sample", [random_rational, random_symbolic])
    def test_axioms(self, sample):
        rng = random.Random(7)
        for _ in range(30):
            x, y, z = sample(rng), sample(rng), sample(rng)
            assert (x + y) * z == x * z + y * z
            assert x * y == y * x
            assert (x - x).is_zero()
            if not y.is_zero():
                assert (x * y) / y == x
                assert y / y == 1
