"""
Exact linear-algebra oracles: adjacency and non-backtracking operators.

n_p(X) = tr(A^p) and, for loopless undirected X, c_p(X) = tr(B^p) where B is
indexed by half-arcs with B[a][b] = 1 iff tgt(a) = src(b) and b ≠ inv(a).
"""

import sympy as sp

from graphtopy.core.errors import InvalidParameterError, LoopsPresentError
from graphtopy.graphs.models import DirectedGraph, Graph, UndirectedGraph

from .homs import closed_walks
from .series import T, IntPolynomial


def adjacency_matrix(x: Graph) -> sp.Matrix:
    """A[u][v] = number of (half-)arcs u -> v, rows in sorted node order."""
    index = {u: k for k, u in enumerate(x.sorted_nodes)}
    a = sp.zeros(len(index), len(index))
    for e in x.edges:
        a[index[x.src[e]], index[x.tgt[e]]] += 1
    return a


def degree_matrix(x: UndirectedGraph) -> sp.Matrix:
    """Diagonal matrix of out-half-arc counts."""
    if not x.nodes:
        return sp.zeros(0, 0)
    return sp.diag(*[len(x.out_edges[u]) for u in x.sorted_nodes])


def _refuse_loops(x: UndirectedGraph) -> None:
    if x.has_loops():
        loop = next(h for h in x.sorted_edges if x.src[h] == x.tgt[h])
        raise LoopsPresentError(
            "Non-backtracking operator is undefined for graphs with loops", loop
        )


def hashimoto_matrix(x: UndirectedGraph) -> sp.Matrix:
    _refuse_loops(x)
    halfarcs = x.sorted_edges
    index = {h: k for k, h in enumerate(halfarcs)}
    b = sp.zeros(len(halfarcs), len(halfarcs))
    for a in halfarcs:
        for c in x.out_edges[x.tgt[a]]:
            if c != x.inv[a]:
                b[index[a], index[c]] = 1
    return b


def _trace_power(m: sp.Matrix, p: int) -> int:
    if p < 1:
        raise InvalidParameterError(f"p must be >= 1, got {p}", "p")
    if m.rows == 0:
        return 0
    return int((m**p).trace())


def closed_walk_count(x: Graph, p: int) -> int:
    """n_p(X) = tr(A^p)."""
    return _trace_power(adjacency_matrix(x), p)


def hashimoto_count(x: UndirectedGraph, p: int) -> int:
    """c_p(X) = tr(B^p); refuses graphs with loops."""
    return _trace_power(hashimoto_matrix(x), p)


def cycle_count_vector(x: DirectedGraph, bound: int) -> dict[int, int]:
    """p ↦ n_p(X) for 1 ≤ p ≤ bound."""
    a = adjacency_matrix(x)
    counts: dict[int, int] = {}
    power = sp.eye(a.rows)
    for p in range(1, bound + 1):
        power = power * a
        counts[p] = int(power.trace()) if a.rows else 0
    return counts


def nb_count_vector(x: UndirectedGraph, bound: int) -> dict[int, int]:
    """p ↦ c_p(X); the operator trace when loopless, enumeration otherwise."""
    if x.has_loops():
        return {p: len(closed_walks(x, p, True)) for p in range(1, bound + 1)}
    b = hashimoto_matrix(x)
    counts: dict[int, int] = {}
    power = sp.eye(b.rows)
    for p in range(1, bound + 1):
        power = power * b
        counts[p] = int(power.trace()) if b.rows else 0
    return counts


def reciprocal_determinant(m: sp.Matrix) -> IntPolynomial:
    """det(I - tM) by fraction-free (Bareiss) elimination."""
    if m.rows == 0:
        return IntPolynomial.one()
    det = (sp.eye(m.rows) - T * m).det(method="bareiss")
    return IntPolynomial.from_expr(det)
