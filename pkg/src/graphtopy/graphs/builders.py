"""
Constructors for every named graph.

Labeling conventions:
    c_p       nodes "0".."p-1", arcs "a{n}": n -> n+1
    c^p_U     nodes "0".."p-1", half-arcs "{n}+" (n -> n+1) and "{n}-"
              (n+1 -> n) with inv("{n}+") = "{n}-"
    P_n       nodes "0".."n-1", half-arcs "{p}+" (p -> p+1) and "{p}-"
    B_n       node "*", degenerate loops "a0".."a{n-1}"
    D_n       nodes "0", "1", half-arcs "a{i}+" (0 -> 1) and "a{i}-"
"""

from collections.abc import Callable
from itertools import combinations

from graphtopy.core.errors import InvalidParameterError, UnknownGraphKindError

from .models import DirectedGraph, Flavor, Graph, GraphMorphism, UndirectedGraph


def _positive(name: str, value: int | None) -> int:
    if value is None or value < 1:
        raise InvalidParameterError(f"{name} must be >= 1, got {value}", name)
    return value


# =============================================================================
# Directed
# =============================================================================


def dot() -> DirectedGraph:
    return DirectedGraph.build(["0"], [])


def arc() -> DirectedGraph:
    return DirectedGraph.build(["0", "1"], [("a", "0", "1")])


def directed_cycle(p: int) -> DirectedGraph:
    _positive("p", p)
    nodes = [str(n) for n in range(p)]
    return DirectedGraph.build(
        nodes, [(f"a{n}", str(n), str((n + 1) % p)) for n in range(p)]
    )


def directed_bouquet(n: int) -> DirectedGraph:
    """One node with n loops (the Cayley graph of the one-point F_n-set)."""
    _positive("n", n)
    return DirectedGraph.build(["*"], [(f"a{i}", "*", "*") for i in range(n)])


# =============================================================================
# Undirected
# =============================================================================


def undirected_dot() -> UndirectedGraph:
    return UndirectedGraph.build(["x"], [])


def undirected_arc() -> UndirectedGraph:
    return UndirectedGraph.build(
        ["u1", "u2"],
        [("a1", "u1", "u2", "a2"), ("a2", "u2", "u1", "a1")],
    )


def cherry() -> UndirectedGraph:
    """V_U: two arcs b, c out of v1."""
    return UndirectedGraph.build(
        ["v1", "v2", "v3"],
        [
            ("b1", "v1", "v2", "b2"),
            ("b2", "v2", "v1", "b1"),
            ("c1", "v1", "v3", "c2"),
            ("c2", "v3", "v1", "c1"),
        ],
    )


def path(n: int) -> UndirectedGraph:
    _positive("n", n)
    rows = []
    for p in range(n - 1):
        rows.append((f"{p}+", str(p), str(p + 1), f"{p}-"))
        rows.append((f"{p}-", str(p + 1), str(p), f"{p}+"))
    return UndirectedGraph.build([str(k) for k in range(n)], rows)


def undirected_cycle(p: int) -> UndirectedGraph:
    _positive("p", p)
    rows = []
    for n in range(p):
        nxt = str((n + 1) % p)
        rows.append((f"{n}+", str(n), nxt, f"{n}-"))
        rows.append((f"{n}-", nxt, str(n), f"{n}+"))
    return UndirectedGraph.build([str(n) for n in range(p)], rows)


def eight() -> UndirectedGraph:
    """Two non-degenerate loops on one node."""
    return UndirectedGraph.build(
        ["*"],
        [
            ("x+", "*", "*", "x-"),
            ("x-", "*", "*", "x+"),
            ("y+", "*", "*", "y-"),
            ("y-", "*", "*", "y+"),
        ],
    )


def bouquet(n: int) -> UndirectedGraph:
    """B_n: one node and n degenerate loops."""
    _positive("n", n)
    return UndirectedGraph.build(
        ["*"], [(f"a{i}", "*", "*", f"a{i}") for i in range(n)]
    )


def dipole(n: int) -> UndirectedGraph:
    """D_n: n parallel arcs between 0 and 1."""
    _positive("n", n)
    rows = []
    for i in range(n):
        rows.append((f"a{i}+", "0", "1", f"a{i}-"))
        rows.append((f"a{i}-", "1", "0", f"a{i}+"))
    return UndirectedGraph.build(["0", "1"], rows)


def complete_graph(n: int) -> UndirectedGraph:
    _positive("n", n)
    nodes = [str(k) for k in range(n)]
    return UndirectedGraph.from_edges(nodes, combinations(nodes, 2))


def petersen() -> UndirectedGraph:
    outer = [(str(k), str((k + 1) % 5)) for k in range(5)]
    spokes = [(str(k), str(k + 5)) for k in range(5)]
    inner = [(str(k + 5), str((k + 2) % 5 + 5)) for k in range(5)]
    return UndirectedGraph.from_edges(
        [str(k) for k in range(10)], outer + spokes + inner
    )


def empty(flavor: Flavor = "directed") -> Graph:
    if flavor == "undirected":
        return UndirectedGraph.build([], [])
    return DirectedGraph.build([], [])


def terminal(flavor: Flavor = "directed") -> Graph:
    """Terminal presheaf: one node and one (degenerate, if undirected) loop."""
    if flavor == "undirected":
        return UndirectedGraph.build(["*"], [("a", "*", "*", "a")])
    return DirectedGraph.build(["*"], [("a", "*", "*")])


# =============================================================================
# Named morphisms used by the counterexamples
# =============================================================================


def elementary_folding() -> GraphMorphism:
    """V_U -> A_U folding b and c onto a."""
    return GraphMorphism(
        domain=cherry(),
        codomain=undirected_arc(),
        f0={"v1": "u1", "v2": "u2", "v3": "u2"},
        f1={"b1": "a1", "c1": "a1", "b2": "a2", "c2": "a2"},
    )


def cherry_to_digon() -> GraphMorphism:
    """l: V_U -> c^2_U with l1(b1) = [0]+ and l1(c1) = [1]-."""
    return GraphMorphism(
        domain=cherry(),
        codomain=undirected_cycle(2),
        f0={"v1": "0", "v2": "1", "v3": "1"},
        f1={"b1": "0+", "b2": "0-", "c1": "1-", "c2": "1+"},
    )


def digon_to_arc() -> GraphMorphism:
    """m: c^2_U -> A_U with m1([0]+) = m1([1]-) = a1."""
    return GraphMorphism(
        domain=undirected_cycle(2),
        codomain=undirected_arc(),
        f0={"0": "u1", "1": "u2"},
        f1={"0+": "a1", "1-": "a1", "0-": "a2", "1+": "a2"},
    )


def cycle_quotient(p: int, q: int) -> GraphMorphism:
    """c^p_U -> c^q_U, [n] -> [n mod q]; requires q | p."""
    if p % q:
        raise InvalidParameterError(f"{q} does not divide {p}", "q")
    return GraphMorphism(
        domain=undirected_cycle(p),
        codomain=undirected_cycle(q),
        f0={str(n): str(n % q) for n in range(p)},
        f1={f"{n}{s}": f"{n % q}{s}" for n in range(p) for s in "+-"},
    )


# =============================================================================
# Dispatch
# =============================================================================

_BUILDERS: dict[str, Callable[..., Graph]] = {
    "D": lambda: dot(),
    "A": lambda: arc(),
    "c": lambda p=None: directed_cycle(p),
    "B_directed": lambda n=None: directed_bouquet(n),
    "D_U": lambda: undirected_dot(),
    "A_U": lambda: undirected_arc(),
    "V_U": lambda: cherry(),
    "P": lambda n=None: path(n),
    "c_U": lambda p=None: undirected_cycle(p),
    "C": lambda p=None: undirected_cycle(p),
    "eight": lambda: eight(),
    "B": lambda n=None: bouquet(n),
    "D_n": lambda n=None: dipole(n),
    "K": lambda n=None: complete_graph(n),
    "petersen": lambda: petersen(),
    "empty": lambda flavor="directed": empty(flavor),
    "terminal": lambda flavor="directed": terminal(flavor),
}

GRAPH_KINDS = tuple(sorted(_BUILDERS))


def standard_graph(kind: str, **params) -> Graph:
    """Return the named graph.

    Examples:
        >>> standard_graph("c", p=3)
        DirectedGraph(nodes=3, arcs=3)
        >>> standard_graph("B", n=3)
        UndirectedGraph(nodes=1, halfarcs=3, arcs=3)
    """
    try:
        builder = _BUILDERS[kind]
    except KeyError:
        raise UnknownGraphKindError(kind)
    try:
        return builder(**params)
    except TypeError as e:
        raise InvalidParameterError(f"Invalid parameters for {kind}: {e}", kind)
