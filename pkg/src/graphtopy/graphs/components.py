"""Connectivity and bipartiteness through networkx multigraph views."""

from collections.abc import Iterable

import networkx as nx

from .models import DirectedGraph, Graph, GraphMorphism, NodeId, UndirectedGraph


def to_networkx(g: Graph) -> nx.MultiGraph | nx.MultiDiGraph:
    """One networkx edge per arc, keyed by arc id (half-arc representative)."""
    if isinstance(g, UndirectedGraph):
        mg = nx.MultiGraph()
        mg.add_nodes_from(g.sorted_nodes)
        for h in g.arcs:
            mg.add_edge(g.src[h], g.tgt[h], key=h)
        return mg
    md = nx.MultiDiGraph()
    md.add_nodes_from(g.sorted_nodes)
    for a in g.sorted_edges:
        md.add_edge(g.src[a], g.tgt[a], key=a)
    return md


def connected_components(g: Graph) -> list[frozenset[NodeId]]:
    """Weak components, ordered by their smallest node."""
    view = to_networkx(g)
    if view.is_directed():
        blocks = nx.weakly_connected_components(view)
    else:
        blocks = nx.connected_components(view)
    return sorted((frozenset(b) for b in blocks), key=min)


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) == 1


def induced_subgraph(g: Graph, nodes: Iterable[NodeId]) -> GraphMorphism:
    """Inclusion of the full subgraph on `nodes` into g."""
    keep = frozenset(nodes)
    edges = [e for e in g.sorted_edges if g.src[e] in keep and g.tgt[e] in keep]
    if isinstance(g, UndirectedGraph):
        sub: Graph = UndirectedGraph.build(
            keep, [(h, g.src[h], g.tgt[h], g.inv[h]) for h in edges]
        )
    else:
        sub = DirectedGraph.build(keep, [(a, g.src[a], g.tgt[a]) for a in edges])
    return GraphMorphism(
        domain=sub,
        codomain=g,
        f0={n: n for n in keep},
        f1={e: e for e in edges},
    )


def is_bipartite(g: UndirectedGraph) -> bool:
    """Loops (degenerate or not) make a graph non-bipartite."""
    if g.has_loops():
        return False
    return nx.is_bipartite(to_networkx(g))


def bipartition(g: UndirectedGraph) -> dict[NodeId, int] | None:
    """0/1 coloring of the nodes, smallest node of each component colored 0."""
    if not is_bipartite(g):
        return None
    view = to_networkx(g)
    coloring: dict[NodeId, int] = {}
    for block in connected_components(g):
        root = min(block)
        coloring[root] = 0
        for u, v in nx.bfs_edges(view, root):
            coloring[v] = 1 - coloring[u]
    return coloring
