"""
Isomorphism search by backtracking over node bijections.

Nodes are matched in order of decreasing rarity of their signature; each
partial assignment is checked against the multiplicity of arcs between every
pair of already assigned nodes. Once nodes are fixed, (half-)arcs between
matched pairs are paired in sorted order, which is always possible when the
multiplicities agree.
"""

from collections import Counter

from graphtopy.core.errors import FlavorMismatchError
from graphtopy.core.logging import get_logger

from .models import Graph, GraphMorphism, NodeId, UndirectedGraph

logger = get_logger(__name__)


def _loop_split(g: Graph, x: NodeId) -> tuple[int, int]:
    """(degenerate loops, non-degenerate loop half-arcs) at x."""
    loops = g.between.get((x, x), ())
    if isinstance(g, UndirectedGraph):
        degenerate = sum(1 for h in loops if g.is_degenerate(h))
        return degenerate, len(loops) - degenerate
    return 0, len(loops)


def _signature(g: Graph, x: NodeId) -> tuple[int, ...]:
    out_deg = len(g.out_edges.get(x, ()))
    in_deg = sum(1 for e in g.edges if g.tgt[e] == x)
    return (out_deg, in_deg, *_loop_split(g, x))


def _multiplicity(g: Graph, u: NodeId, v: NodeId) -> int:
    return len(g.between.get((u, v), ()))


def _compatible(
    x: Graph, y: Graph, u: NodeId, v: NodeId, assigned: dict[NodeId, NodeId]
) -> bool:
    if _loop_split(x, u) != _loop_split(y, v):
        return False
    for u2, v2 in assigned.items():
        if _multiplicity(x, u, u2) != _multiplicity(y, v, v2):
            return False
        if _multiplicity(x, u2, u) != _multiplicity(y, v2, v):
            return False
    return True


def _edge_map(x: Graph, y: Graph, f0: dict[NodeId, NodeId]) -> dict[str, str]:
    f1: dict[str, str] = {}
    if not isinstance(x, UndirectedGraph):
        for (u, v), group in x.between.items():
            f1.update(zip(group, y.between[(f0[u], f0[v])]))
        return f1

    assert isinstance(y, UndirectedGraph)
    for (u, v), group in x.between.items():
        if u == v:
            target = y.between[(f0[u], f0[u])]
            f1.update(
                zip(
                    [h for h in group if x.is_degenerate(h)],
                    [h for h in target if y.is_degenerate(h)],
                )
            )
            reps = [h for h in group if not x.is_degenerate(h) and h < x.inv[h]]
            images = [h for h in target if not y.is_degenerate(h) and h < y.inv[h]]
            for h, k in zip(reps, images):
                f1[h], f1[x.inv[h]] = k, y.inv[k]
        elif u < v:
            for h, k in zip(group, y.between[(f0[u], f0[v])]):
                f1[h], f1[x.inv[h]] = k, y.inv[k]
    return f1


def is_isomorphic(x: Graph, y: Graph) -> GraphMorphism | None:
    """Return an invertible morphism x -> y, or None.

    Raises:
        FlavorMismatchError: x and y have different flavors.
    """
    if x.flavor != y.flavor:
        raise FlavorMismatchError("Cannot compare graphs of different flavors")
    if len(x.nodes) != len(y.nodes) or len(x.edges) != len(y.edges):
        return None

    x_sig = {u: _signature(x, u) for u in x.sorted_nodes}
    y_sig = {v: _signature(y, v) for v in y.sorted_nodes}
    if Counter(x_sig.values()) != Counter(y_sig.values()):
        return None

    rarity = Counter(x_sig.values())
    order = sorted(x.sorted_nodes, key=lambda u: (rarity[x_sig[u]], u))
    candidates = {
        u: [v for v in y.sorted_nodes if y_sig[v] == x_sig[u]] for u in order
    }

    assigned: dict[NodeId, NodeId] = {}
    used: set[NodeId] = set()

    def search(depth: int) -> bool:
        if depth == len(order):
            return True
        u = order[depth]
        for v in candidates[u]:
            if v in used or not _compatible(x, y, u, v, assigned):
                continue
            assigned[u] = v
            used.add(v)
            if search(depth + 1):
                return True
            del assigned[u]
            used.discard(v)
        return False

    if not search(0):
        logger.debug("No isomorphism", domain=repr(x), codomain=repr(y))
        return None
    return GraphMorphism(
        domain=x, codomain=y, f0=dict(assigned), f1=_edge_map(x, y, assigned)
    )
