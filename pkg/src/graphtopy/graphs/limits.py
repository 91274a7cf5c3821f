"""
Binary limits and colimits in the presheaf categories, computed pointwise.

Identifier conventions:
    sum        "0:{x}" for the left summand, "1:{y}" for the right
    product    "({x},{y})"
    pullback   "({x},{y})" restricted to matching pairs
    pushout    each class is named by its smallest member of the sum
"""

from typing import NamedTuple

from networkx.utils import UnionFind

from graphtopy.core.errors import FlavorMismatchError

from .builders import empty, terminal
from .models import DirectedGraph, Graph, GraphMorphism, UndirectedGraph


class Construction(NamedTuple):
    """A constructed object with its two legs (injections or projections)."""

    graph: Graph
    left: GraphMorphism
    right: GraphMorphism


def _same_flavor(*graphs: Graph) -> None:
    if len({g.flavor for g in graphs}) > 1:
        raise FlavorMismatchError()


def _make(
    template: Graph,
    nodes,
    edges,
    src: dict[str, str],
    tgt: dict[str, str],
    inv: dict[str, str] | None = None,
) -> Graph:
    if isinstance(template, UndirectedGraph):
        return UndirectedGraph(
            nodes=frozenset(nodes),
            halfarcs=frozenset(edges),
            src=src,
            tgt=tgt,
            inv=inv or {},
        )
    return DirectedGraph(
        nodes=frozenset(nodes), arcs=frozenset(edges), src=src, tgt=tgt
    )


def pair_id(a: str, b: str) -> str:
    return f"({a},{b})"


def graph_sum(x: Graph, y: Graph) -> Construction:
    """X + Y with its two injections."""
    _same_flavor(x, y)
    tag = {0: x, 1: y}
    nodes, edges = [], []
    src: dict[str, str] = {}
    tgt: dict[str, str] = {}
    inv: dict[str, str] = {}
    for k, g in tag.items():
        nodes += [f"{k}:{n}" for n in g.nodes]
        for e in g.edges:
            edges.append(f"{k}:{e}")
            src[f"{k}:{e}"] = f"{k}:{g.src[e]}"
            tgt[f"{k}:{e}"] = f"{k}:{g.tgt[e]}"
            if isinstance(g, UndirectedGraph):
                inv[f"{k}:{e}"] = f"{k}:{g.inv[e]}"
    s = _make(x, nodes, edges, src, tgt, inv)
    legs = [
        GraphMorphism(
            domain=g,
            codomain=s,
            f0={n: f"{k}:{n}" for n in g.nodes},
            f1={e: f"{k}:{e}" for e in g.edges},
        )
        for k, g in tag.items()
    ]
    return Construction(s, legs[0], legs[1])


def product(x: Graph, y: Graph) -> Construction:
    """X × Y with its two projections; every structure map componentwise."""
    _same_flavor(x, y)
    nodes = [pair_id(a, b) for a in x.nodes for b in y.nodes]
    edges, src, tgt, inv = [], {}, {}, {}
    p0, q0, p1, q1 = {}, {}, {}, {}
    for a in x.nodes:
        for b in y.nodes:
            p0[pair_id(a, b)], q0[pair_id(a, b)] = a, b
    for e in x.edges:
        for d in y.edges:
            h = pair_id(e, d)
            edges.append(h)
            src[h] = pair_id(x.src[e], y.src[d])
            tgt[h] = pair_id(x.tgt[e], y.tgt[d])
            if isinstance(x, UndirectedGraph) and isinstance(y, UndirectedGraph):
                inv[h] = pair_id(x.inv[e], y.inv[d])
            p1[h], q1[h] = e, d
    g = _make(x, nodes, edges, src, tgt, inv)
    return Construction(
        g,
        GraphMorphism(domain=g, codomain=x, f0=p0, f1=p1),
        GraphMorphism(domain=g, codomain=y, f0=q0, f1=q1),
    )


def pushout(f: GraphMorphism, g: GraphMorphism) -> Construction:
    """Pushout of X <-f- Z -g-> Y: the sum quotiented by f(z) ~ g(z).

    The involution descends to the quotient because f and g commute with it.
    """
    _same_flavor(f.codomain, g.codomain, f.domain)
    s, left, right = graph_sum(f.codomain, g.codomain)

    node_uf = UnionFind(s.nodes)
    edge_uf = UnionFind(s.edges)
    for z in f.domain.nodes:
        node_uf.union(left.f0[f.f0[z]], right.f0[g.f0[z]])
    for e in f.domain.edges:
        edge_uf.union(left.f1[f.f1[e]], right.f1[g.f1[e]])

    node_rep = {m: min(block) for block in node_uf.to_sets() for m in block}
    edge_rep = {m: min(block) for block in edge_uf.to_sets() for m in block}

    src = {edge_rep[e]: node_rep[s.src[e]] for e in s.edges}
    tgt = {edge_rep[e]: node_rep[s.tgt[e]] for e in s.edges}
    inv = {}
    if isinstance(s, UndirectedGraph):
        inv = {edge_rep[e]: edge_rep[s.inv[e]] for e in s.edges}
    q = _make(s, set(node_rep.values()), set(edge_rep.values()), src, tgt, inv)

    def leg(inj: GraphMorphism) -> GraphMorphism:
        return GraphMorphism(
            domain=inj.domain,
            codomain=q,
            f0={n: node_rep[m] for n, m in inj.f0.items()},
            f1={e: edge_rep[d] for e, d in inj.f1.items()},
        )

    return Construction(q, leg(left), leg(right))


def pullback(f: GraphMorphism, g: GraphMorphism) -> Construction:
    """Pullback of X -f-> Z <-g- Y: pairs agreeing in Z."""
    _same_flavor(f.domain, g.domain, f.codomain)
    x, y = f.domain, g.domain
    nodes, p0, q0 = [], {}, {}
    for a in x.sorted_nodes:
        for b in y.sorted_nodes:
            if f.f0[a] == g.f0[b]:
                n = pair_id(a, b)
                nodes.append(n)
                p0[n], q0[n] = a, b
    edges, src, tgt, inv, p1, q1 = [], {}, {}, {}, {}, {}
    for e in x.sorted_edges:
        for d in y.sorted_edges:
            if f.f1[e] != g.f1[d]:
                continue
            h = pair_id(e, d)
            edges.append(h)
            src[h] = pair_id(x.src[e], y.src[d])
            tgt[h] = pair_id(x.tgt[e], y.tgt[d])
            if isinstance(x, UndirectedGraph) and isinstance(y, UndirectedGraph):
                inv[h] = pair_id(x.inv[e], y.inv[d])
            p1[h], q1[h] = e, d
    pb = _make(x, nodes, edges, src, tgt, inv)
    return Construction(
        pb,
        GraphMorphism(domain=pb, codomain=x, f0=p0, f1=p1),
        GraphMorphism(domain=pb, codomain=y, f0=q0, f1=q1),
    )


__all__ = [
    "Construction",
    "graph_sum",
    "product",
    "pushout",
    "pullback",
    "empty",
    "terminal",
]
