"""
Cayley graph functors and the colored-graph correspondence.

The arc (or half-arc) of generator a at x is named "{a}@{x}" and runs from
x to a(x). In the undirected graph of an involutive action "{a}@{x}" is
paired with "{a}@{a(x)}", and is degenerate when a fixes x.
"""

import re

from graphtopy.core.errors import InvalidActionError, NotACoveringError
from graphtopy.coverings.covering import Covering, covering_diagnostics
from graphtopy.graphs.models import DirectedGraph, GraphMorphism, UndirectedGraph

from .action import GSetAction, GSetMorphism


def arc_id(generator: str, x: str) -> str:
    return f"{generator}@{x}"


def color_order(name: str) -> tuple:
    """Sort key comparing digit runs numerically, so a2 precedes a10."""
    return tuple(
        (0, int(part), "") if part.isdecimal() else (1, 0, part)
        for part in re.findall(r"\d+|\D+", name)
    )


def cayley_directed(x: GSetAction) -> DirectedGraph:
    x.ensure_valid()
    return DirectedGraph.build(
        x.sorted_carrier,
        [
            (arc_id(a, p), p, x(a, p))
            for a in x.generators
            for p in x.sorted_carrier
        ],
    )


def cayley_undirected(x: GSetAction) -> UndirectedGraph:
    """Requires an involutive action."""
    x.ensure_valid()
    if x.kind != "involutive":
        raise InvalidActionError("Undirected Cayley graph needs involutions", x.kind)
    return UndirectedGraph.build(
        x.sorted_carrier,
        [
            (arc_id(a, p), p, x(a, p), arc_id(a, x(a, p)))
            for a in x.generators
            for p in x.sorted_carrier
        ],
    )


def _cayley_map(f: GSetMorphism, undirected: bool) -> GraphMorphism:
    f.ensure_valid()
    build = cayley_undirected if undirected else cayley_directed
    return GraphMorphism(
        domain=build(f.domain),
        codomain=build(f.codomain),
        f0=dict(f.map),
        f1={
            arc_id(a, p): arc_id(a, f.map[p])
            for a in f.domain.generators
            for p in f.domain.carrier
        },
    )


def cayley_directed_map(f: GSetMorphism) -> GraphMorphism:
    """The Cayley functor on an equivariant map."""
    return _cayley_map(f, undirected=False)


def cayley_undirected_map(f: GSetMorphism) -> GraphMorphism:
    return _cayley_map(f, undirected=True)


def colored_to_gset(x: UndirectedGraph, coloring: Covering) -> GSetAction:
    """G_n-set on the nodes of x: a_i(u) is the far end of the a_i-colored arc at u.

    Generators are named after the loops of B_n, in `color_order`.
    """
    if coloring.total != x or len(coloring.base.nodes) != 1:
        raise NotACoveringError("Coloring must be a covering of B_n by this graph")
    found = covering_diagnostics(coloring.morphism)
    if found:
        raise NotACoveringError(found[0].message, found[0].subject)
    colors = sorted(coloring.base.edges, key=color_order)
    maps: dict[str, dict[str, str]] = {a: {} for a in colors}
    for u in x.sorted_nodes:
        for h in x.out_edges[u]:
            maps[coloring.morphism.f1[h]][u] = x.tgt[h]
    return GSetAction.from_maps(x.sorted_nodes, maps, kind="involutive").ensure_valid()
