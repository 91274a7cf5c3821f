"""
Objects of R_X^p: a p-cycle with a forest attached, covering X.

extend_cycle_to_rxp unfolds the stars of Y around a non-backtracking cycle
h: c^p_U -> Y. Every cycle node gets one branch per half-arc of its image
that the cycle does not use; every tree node below the depth limit gets one
branch per half-arc of its image other than the way back. Node ids:

    "{n}"                 cycle node n
    "{parent}/{e}"        child reached along the half-arc e of Y
    "{child}+", "{child}-"  half-arcs parent -> child and back
"""

from dataclasses import dataclass, field

from graphtopy.core.errors import (
    ConsistencyError,
    InvalidParameterError,
    LoopsPresentError,
)
from graphtopy.core.logging import get_logger, log_computation
from graphtopy.graphs.builders import undirected_cycle
from graphtopy.graphs.components import is_connected
from graphtopy.graphs.models import GraphMorphism, UndirectedGraph, compose

from .covering import Covering

logger = get_logger(__name__)


@dataclass(frozen=True)
class RXpObject:
    """U in R_X^p, truncated at `depth`, with its structure map U -> X."""

    cycle_length: int
    graph: UndirectedGraph
    forest: dict[str, list[str]]
    node_depth: dict[str, int]
    depth: int
    structure: GraphMorphism = field(repr=False)

    def is_unicyclic(self) -> bool:
        """Connected with exactly one cycle, so it retracts to the cycle."""
        return is_connected(self.graph) and len(self.graph.arcs) == len(
            self.graph.nodes
        )

    def is_locally_covering(self) -> bool:
        """Star bijection of the structure map at every node above the leaves."""
        x = self.structure.codomain
        for node, d in self.node_depth.items():
            if d >= self.depth:
                continue
            images = sorted(self.structure.f1[h] for h in self.graph.out_edges[node])
            if images != sorted(x.out_edges[self.structure.f0[node]]):
                return False
        return True


@dataclass(frozen=True)
class RXpExtension:
    obj: RXpObject
    into_total: GraphMorphism


def extend_cycle_to_rxp(
    f: Covering, h: GraphMorphism, depth: int = 1
) -> RXpExtension:
    """Extend the non-backtracking p-cycle h: c^p_U -> Y to U -> Y over X.

    Raises:
        LoopsPresentError: Y has a loop.
        InvalidParameterError: h is not a non-backtracking cycle into Y.
    """
    y = f.total
    if y.has_loops():
        loop = next(e for e in y.sorted_edges if y.src[e] == y.tgt[e])
        raise LoopsPresentError("Cannot extend cycles in a graph with loops", loop)
    if depth < 0:
        raise InvalidParameterError(f"depth must be >= 0, got {depth}", "depth")
    p = len(h.domain.nodes)
    if h.codomain != y or len(h.domain.edges) != 2 * p:
        raise InvalidParameterError("h must be a cycle c^p_U -> Y")
    walk = [h.f1[f"{n}+"] for n in range(p)]
    for n in range(p):
        if walk[(n + 1) % p] == y.inv[walk[n]]:
            raise InvalidParameterError(f"cycle backtracks at {n}", str(n))

    cycle = undirected_cycle(p)
    rows = [(e, cycle.src[e], cycle.tgt[e], cycle.inv[e]) for e in cycle.sorted_edges]
    f0 = {str(n): h.f0[str(n)] for n in range(p)}
    f1 = {e: h.f1[e] for e in cycle.sorted_edges}
    forest: dict[str, list[str]] = {str(n): [] for n in range(p)}
    node_depth = {str(n): 0 for n in range(p)}

    def grow(root: str, node: str, level: int, skip: set[str]) -> None:
        if level >= depth:
            return
        for e in y.out_edges[f0[node]]:
            if e in skip:
                continue
            child = f"{node}/{e}"
            f0[child] = y.tgt[e]
            f1[f"{child}+"], f1[f"{child}-"] = e, y.inv[e]
            rows.append((f"{child}+", node, child, f"{child}-"))
            rows.append((f"{child}-", child, node, f"{child}+"))
            forest[root].append(child)
            node_depth[child] = level + 1
            grow(root, child, level + 1, {y.inv[e]})

    for n in range(p):
        used = {walk[n], y.inv[walk[(n - 1) % p]]}
        grow(str(n), str(n), 0, used)

    u = UndirectedGraph.build(f0.keys(), rows)
    into_total = GraphMorphism(domain=u, codomain=y, f0=f0, f1=f1)
    if any(into_total.f1[e] != h.f1[e] for e in cycle.sorted_edges):
        raise ConsistencyError("Extension does not restrict to the cycle")
    obj = RXpObject(
        cycle_length=p,
        graph=u,
        forest=forest,
        node_depth=node_depth,
        depth=depth,
        structure=compose(f.morphism, into_total),
    )
    log_computation(
        "extend_cycle_to_rxp",
        repr(y),
        details={"p": p, "depth": depth, "nodes": len(u.nodes)},
        logger=logger,
    )
    return RXpExtension(obj, into_total)
