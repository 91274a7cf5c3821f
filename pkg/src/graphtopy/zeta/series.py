"""
Exact polynomials and truncated power series.

IntPolynomial holds integer coefficients in ascending degree with no trailing
zero; RationalPowerSeries holds Fraction coefficients c_0..c_P and is exact
up to its order P.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from fractions import Fraction

import sympy as sp
from pydantic import BaseModel

from graphtopy.core.errors import ConsistencyError, InvalidParameterError

T = sp.Symbol("t")


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def _convolve(a, b, m: int, start: int, stop: int | None = None) -> Fraction:
    """Σ_{k=start}^{stop} a[k]·b[m-k], stop defaulting to m."""
    last = m if stop is None else stop
    return sum((a[k] * b[m - k] for k in range(start, last + 1)), Fraction(0))


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial in t, coefficients in ascending degree."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", _trim(int(c) for c in self.coeffs))

    @classmethod
    def from_expr(cls, expr: sp.Expr) -> IntPolynomial:
        coeffs = sp.Poly(sp.expand(expr), T).all_coeffs()
        if not all(c.is_integer for c in coeffs):
            raise ConsistencyError(f"Non-integer polynomial: {expr}")
        return cls(tuple(int(c) for c in reversed(coeffs)))

    @classmethod
    def one(cls) -> IntPolynomial:
        return cls((1,))

    def to_expr(self) -> sp.Expr:
        return sum((c * T**k for k, c in enumerate(self.coeffs)), sp.Integer(0))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __add__(self, other: IntPolynomial) -> IntPolynomial:
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return IntPolynomial(tuple(x + y for x, y in zip(a, b)))

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: IntPolynomial) -> IntPolynomial:
        return self + (-other)

    def __mul__(self, other: IntPolynomial) -> IntPolynomial:
        return IntPolynomial.from_expr(self.to_expr() * other.to_expr())

    def __pow__(self, k: int) -> IntPolynomial:
        return IntPolynomial.from_expr(self.to_expr() ** k)

    def to_series(self, order: int) -> RationalPowerSeries:
        return RationalPowerSeries.from_coeffs(self.coeffs, order)

    def __str__(self) -> str:
        return str(sp.expand(self.to_expr())) if self.coeffs else "0"


class SeriesDocument(BaseModel):
    """{"order": P, "coeffs": ["num/den", ...]}"""

    order: int
    coeffs: list[str]


@dataclass(frozen=True)
class RationalPowerSeries:
    """c_0 + c_1 t + ... + c_P t^P, exact up to order P."""

    order: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.order < 0:
            raise InvalidParameterError(f"order must be >= 0, got {self.order}")
        padded = [Fraction(c) for c in self.coeffs[: self.order + 1]]
        padded += [Fraction(0)] * (self.order + 1 - len(padded))
        object.__setattr__(self, "coeffs", tuple(padded))

    @classmethod
    def from_coeffs(cls, coeffs: Iterable, order: int) -> RationalPowerSeries:
        return cls(order, tuple(Fraction(c) for c in coeffs))

    @classmethod
    def constant(cls, c, order: int) -> RationalPowerSeries:
        return cls(order, (Fraction(c),))

    @classmethod
    def from_log_counts(
        cls, counts: Mapping[int, int], order: int
    ) -> RationalPowerSeries:
        """exp(Σ counts[p] t^p / p) truncated at `order`."""
        s = [Fraction(0)] * (order + 1)
        for p, n in counts.items():
            if 1 <= p <= order:
                s[p] = Fraction(n, p)
        return cls(order, tuple(s)).exp()

    def _check(self, other: RationalPowerSeries) -> int:
        return min(self.order, other.order)

    def __add__(self, other: RationalPowerSeries) -> RationalPowerSeries:
        n = self._check(other)
        return RationalPowerSeries(
            n, tuple(a + b for a, b in zip(self.coeffs[: n + 1], other.coeffs))
        )

    def __neg__(self) -> RationalPowerSeries:
        return RationalPowerSeries(self.order, tuple(-c for c in self.coeffs))

    def __sub__(self, other: RationalPowerSeries) -> RationalPowerSeries:
        return self + (-other)

    def __mul__(self, other: RationalPowerSeries) -> RationalPowerSeries:
        n = self._check(other)
        a, b = self.coeffs, other.coeffs
        return RationalPowerSeries(
            n, tuple(_convolve(a, b, m, start=0) for m in range(n + 1))
        )

    def exp(self) -> RationalPowerSeries:
        """exp(S) via m·f_m = Σ_{k=1}^{m} k·s_k·f_{m-k}; requires s_0 = 0."""
        s = self.coeffs
        if s[0] != 0:
            raise InvalidParameterError("exp requires a zero constant term")
        ks = [k * c for k, c in enumerate(s)]
        f = [Fraction(1)]
        for m in range(1, self.order + 1):
            f.append(_convolve(ks, f, m, start=1) / m)
        return RationalPowerSeries(self.order, tuple(f))

    def log(self) -> RationalPowerSeries:
        """log(F) for c_0 = 1, inverse of exp."""
        f = self.coeffs
        if f[0] != 1:
            raise InvalidParameterError("log requires constant term 1")
        kg = [Fraction(0)]
        for m in range(1, self.order + 1):
            kg.append(m * f[m] - _convolve(kg, f, m, start=1, stop=m - 1))
        return RationalPowerSeries(
            self.order, tuple(c / k if k else c for k, c in enumerate(kg))
        )

    def inverse(self) -> RationalPowerSeries:
        a = self.coeffs
        if a[0] == 0:
            raise InvalidParameterError("Constant term is zero; not invertible")
        b = [1 / a[0]]
        for m in range(1, self.order + 1):
            b.append(-_convolve(a, b, m, start=1) / a[0])
        return RationalPowerSeries(self.order, tuple(b))

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def integer_coeffs(self) -> list[int]:
        if not self.is_integral():
            raise ConsistencyError("Series has non-integer coefficients")
        return [c.numerator for c in self.coeffs]

    def to_document(self) -> SeriesDocument:
        return SeriesDocument(
            order=self.order,
            coeffs=[f"{c.numerator}/{c.denominator}" for c in self.coeffs],
        )

    def __str__(self) -> str:
        terms = [
            str(c) if k == 0 else f"{c}*t^{k}"
            for k, c in enumerate(self.coeffs)
            if c != 0 or k == 0
        ]
        return " + ".join(terms) + f" + O(t^{self.order + 1})"
