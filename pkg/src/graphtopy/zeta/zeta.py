"""Zeta and Ihara series, their reciprocal polynomials, and the Bass check."""

from typing import NamedTuple

import sympy as sp

from graphtopy.core.errors import ConsistencyError, FlavorMismatchError
from graphtopy.core.logging import get_logger
from graphtopy.graphs.models import DirectedGraph, UndirectedGraph

from .counting import (
    adjacency_matrix,
    cycle_count_vector,
    degree_matrix,
    hashimoto_matrix,
    nb_count_vector,
    reciprocal_determinant,
)
from .series import T, IntPolynomial, RationalPowerSeries

logger = get_logger(__name__)


def _integral(series: RationalPowerSeries, what: str) -> RationalPowerSeries:
    if not series.is_integral():
        raise ConsistencyError(f"{what} series has non-integer coefficients")
    return series


def zeta_series(x: DirectedGraph, order: int) -> RationalPowerSeries:
    """Z_X(t) = exp(Σ n_p t^p / p) up to t^order."""
    return _integral(
        RationalPowerSeries.from_log_counts(cycle_count_vector(x, order), order),
        "Zeta",
    )


def zeta_rational(x: DirectedGraph) -> IntPolynomial:
    """1 / Z_X(t) = det(I - tA)."""
    return reciprocal_determinant(adjacency_matrix(x))


def ihara_series(x: UndirectedGraph, order: int) -> RationalPowerSeries:
    """exp(Σ c_p t^p / p) up to t^order; loops allowed."""
    return _integral(
        RationalPowerSeries.from_log_counts(nb_count_vector(x, order), order),
        "Ihara",
    )


def ihara_rational(x: UndirectedGraph) -> IntPolynomial:
    """det(I - tB); raises LoopsPresentError when x has loops."""
    return reciprocal_determinant(hashimoto_matrix(x))


class BassCheck(NamedTuple):
    """det(I - tB) against (1-t²)^(|E|-|V|) det(I - tA + t²(D - I)).

    `rhs` is None when the right side is not an integer polynomial, which
    happens only when the identity fails.
    """

    lhs: IntPolynomial
    rhs: IntPolynomial | None
    exponent: int
    holds: bool


def bass_check(x: UndirectedGraph) -> BassCheck:
    lhs = ihara_rational(x)
    a = adjacency_matrix(x)
    n = a.rows
    exponent = len(x.arcs) - len(x.nodes)
    if n:
        core = (sp.eye(n) - T * a + T**2 * (degree_matrix(x) - sp.eye(n))).det(
            method="bareiss"
        )
    else:
        core = sp.Integer(1)
    rhs_expr = sp.cancel((1 - T**2) ** exponent * core)
    holds = sp.expand(lhs.to_expr() * sp.denom(rhs_expr) - sp.numer(rhs_expr)) == 0
    rhs = None
    if rhs_expr.is_polynomial(T):
        try:
            rhs = IntPolynomial.from_expr(rhs_expr)
        except ConsistencyError:
            rhs = None
    if not holds:
        logger.warning("Bass identity fails", graph=repr(x))
    return BassCheck(lhs, rhs, exponent, holds)


def weak_equiv_directed(x: DirectedGraph, y: DirectedGraph) -> bool:
    """Z_X = Z_Y, decided by equality of the reciprocal polynomials."""
    if x.flavor != "directed" or y.flavor != "directed":
        raise FlavorMismatchError("Weak equivalence of objects needs directed graphs")
    return zeta_rational(x) == zeta_rational(y)
