"""
Edge colorings as coverings.

A covering X -> B_n is a proper n-edge-coloring of an n-regular X whose color
classes are perfect matchings; a covering X -> D_n is the same for a
bipartite X, with the bipartition sent to the two nodes of D_n. The search
assigns colors to arcs in sorted order, lowest color first.
"""

from graphtopy.core.errors import InvalidParameterError
from graphtopy.core.logging import get_logger, log_computation, timed
from graphtopy.graphs.builders import bouquet, dipole
from graphtopy.graphs.components import bipartition
from graphtopy.graphs.models import GraphMorphism, UndirectedGraph

from .covering import Covering

logger = get_logger(__name__)


def _is_regular(x: UndirectedGraph, n: int) -> bool:
    return all(len(x.out_edges[u]) == n for u in x.nodes)


def edge_coloring(x: UndirectedGraph, n: int) -> dict[str, int] | None:
    """Arc representative -> color in 0..n-1 with n distinct colors at each node.

    Returns None when x is not n-regular, has a non-degenerate loop, or
    admits no such coloring.
    """
    if n < 1:
        raise InvalidParameterError(f"n must be >= 1, got {n}", "n")
    if not _is_regular(x, n):
        return None
    if any(x.src[h] == x.tgt[h] and not x.is_degenerate(h) for h in x.halfarcs):
        return None

    arcs = list(x.arcs)
    used: dict[str, set[int]] = {u: set() for u in x.nodes}
    coloring: dict[str, int] = {}

    def search(k: int) -> bool:
        if k == len(arcs):
            return True
        h = arcs[k]
        ends = {x.src[h], x.tgt[h]}
        for color in range(n):
            if any(color in used[u] for u in ends):
                continue
            coloring[h] = color
            for u in ends:
                used[u].add(color)
            if search(k + 1):
                return True
            for u in ends:
                used[u].discard(color)
            del coloring[h]
        return False

    with timed() as clock:
        found = search(0)
    log_computation(
        "edge_coloring",
        repr(x),
        duration=clock.elapsed,
        details={"n": n, "found": found},
        logger=logger,
    )
    return coloring if found else None


def find_n_coloring(x: UndirectedGraph, n: int) -> Covering | None:
    """A covering x -> B_n, or None."""
    coloring = edge_coloring(x, n)
    if coloring is None:
        return None
    f1 = {}
    for h, color in coloring.items():
        f1[h] = f1[x.inv[h]] = f"a{color}"
    f = GraphMorphism(
        domain=x, codomain=bouquet(n), f0={u: "*" for u in x.nodes}, f1=f1
    )
    return Covering.verify(f)


def find_bipartite_coloring(x: UndirectedGraph, n: int) -> Covering | None:
    """A covering x -> D_n, or None when x is not bipartite or not colorable."""
    sides = bipartition(x)
    if sides is None:
        return None
    coloring = edge_coloring(x, n)
    if coloring is None:
        return None
    f1 = {}
    for h, color in coloring.items():
        forward = h if sides[x.src[h]] == 0 else x.inv[h]
        f1[forward], f1[x.inv[forward]] = f"a{color}+", f"a{color}-"
    f = GraphMorphism(
        domain=x,
        codomain=dipole(n),
        f0={u: str(side) for u, side in sides.items()},
        f1=f1,
    )
    return Covering.verify(f)


def coloring_of(c: Covering) -> dict[str, int]:
    """Color index of every half-arc read back from a covering to B_n or D_n."""
    return {h: int(image[1:].rstrip("+-")) for h, image in c.morphism.f1.items()}
