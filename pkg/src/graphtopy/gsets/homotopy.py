"""
Homotopy of G-sets transferred along the directed Cayley functor.

A map of G-sets is a weak equivalence when its Cayley image is one; two
G-sets are weakly equivalent when their Cayley graphs have the same zeta
function.
"""

from dataclasses import dataclass

from graphtopy.core.errors import InvalidActionError
from graphtopy.core.logging import get_logger
from graphtopy.graphs.components import connected_components
from graphtopy.zeta.homs import BijectivityReport, counting_bijectivity
from graphtopy.zeta.zeta import weak_equiv_directed

from .action import GSetAction, GSetMorphism, same_generators
from .cayley import cayley_directed, cayley_directed_map

logger = get_logger(__name__)


def weak_equiv_gsets(x: GSetAction, y: GSetAction) -> bool:
    same_generators(x, y)
    return weak_equiv_directed(cayley_directed(x), cayley_directed(y))


def weak_equiv_gset_morphism(f: GSetMorphism, bound: int) -> BijectivityReport:
    """Bounded bijectivity of the Cayley image on Hom(c_p, -)."""
    return counting_bijectivity(cayley_directed_map(f), bound, "directed")


@dataclass(frozen=True)
class CofibrancyVerdict:
    cofibrant: bool
    reason: str


def is_cofibrant_fnset(x: GSetAction) -> CofibrancyVerdict:
    """Cofibrant iff every Cayley component is a forest attached to one cycle.

    A finite component on k points carries n·k arcs, so with n ≥ 2
    generators it always holds several cycles.
    """
    if x.kind != "free":
        raise InvalidActionError("Cofibrancy is decided for F_n-sets", x.kind)
    g = cayley_directed(x)
    for block in connected_components(g):
        arcs = [a for a in g.sorted_edges if g.src[a] in block]
        if len(arcs) > len(block):
            n = len(x.generators)
            return CofibrancyVerdict(
                False,
                f"component of {min(block)} has {len(arcs)} arcs on {len(block)} "
                f"nodes; {n} generators give every node out-degree {n}",
            )
        if any(len(g.out_edges[u]) > 1 for u in block):
            return CofibrancyVerdict(
                False, f"component of {min(block)} is not oriented toward its cycle"
            )
    return CofibrancyVerdict(True, "every component is a cycle with trees attached")
