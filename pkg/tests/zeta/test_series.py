"""
Tests for exact power series and integer polynomials.
"""

from fractions import Fraction

import pytest

from graphtopy.core.errors import ConsistencyError, InvalidParameterError
from graphtopy.zeta.series import T, IntPolynomial, RationalPowerSeries


class TestIntPolynomial:
    """Test integer polynomials in t."""

    def test_trailing_zeros_trimmed(self):
        assert IntPolynomial((1, 2, 0, 0)).coeffs == (1, 2)
        assert IntPolynomial((0,)).coeffs == ()

    def test_arithmetic(self):
        one_minus = IntPolynomial((1, -1))
        one_plus = IntPolynomial((1, 1))

        assert one_minus * one_plus == IntPolynomial((1, 0, -1))
        assert one_minus + one_plus == IntPolynomial((2,))
        assert (one_minus**2).coeffs == (1, -2, 1)

    def test_expr_round_trip(self):
        p = IntPolynomial.from_expr((1 - T**3) ** 2)

        assert p.coeffs == (1, 0, 0, -2, 0, 0, 1)
        assert p.degree == 6
        assert str(IntPolynomial()) == "0"

    def test_rejects_rational_coefficients(self):
        with pytest.raises(ConsistencyError):
            IntPolynomial.from_expr(T / 2)


class TestRationalPowerSeries:
    """Test truncated series arithmetic."""

    def test_padding(self):
        s = RationalPowerSeries.from_coeffs([1, 2], 3)

        assert s.coeffs == (1, 2, 0, 0)

    def test_negative_order(self):
        with pytest.raises(InvalidParameterError):
            RationalPowerSeries(-1, ())

    def test_geometric_series(self):
        """Test 1/(1-t) = exp(Σ t^p/p)."""
        inverse = IntPolynomial((1, -1)).to_series(5).inverse()
        logs = RationalPowerSeries.from_log_counts({p: 1 for p in range(1, 6)}, 5)

        assert inverse.integer_coeffs() == [1] * 6
        assert logs.coeffs == inverse.coeffs

    def test_exp_log_inverse(self):
        s = RationalPowerSeries.from_coeffs([0, 1, Fraction(1, 2), -3], 6)

        assert s.exp().log().coeffs == s.coeffs

    def test_exp_needs_zero_constant(self):
        with pytest.raises(InvalidParameterError):
            RationalPowerSeries.constant(1, 3).exp()

    def test_log_needs_unit_constant(self):
        with pytest.raises(InvalidParameterError):
            RationalPowerSeries.constant(2, 3).log()

    def test_truncation_follows_the_shorter_order(self):
        a = RationalPowerSeries.from_coeffs([1, 1, 1, 1], 3)
        b = RationalPowerSeries.from_coeffs([1, 1], 1)

        assert (a * b).order == 1

    def test_integer_coeffs_refuses_fractions(self):
        s = RationalPowerSeries.from_coeffs([1, Fraction(1, 2)], 1)

        assert not s.is_integral()
        with pytest.raises(ConsistencyError):
            s.integer_coeffs()

    def test_document(self):
        doc = RationalPowerSeries.from_coeffs([1, Fraction(-1, 2)], 1).to_document()

        assert doc.order == 1
        assert doc.coeffs == ["1/1", "-1/2"]
