"""
Galoisian complexes as G_n-sets on their simplexes.

Omega is 2-colored into direct (positive) and indirect simplexes; the
generator a_i sends a simplex to its neighbour across the i-th face, so it
always changes the color. The undirected Cayley graph L_n is therefore
bipartite, and its non-backtracking cycles record the ramification.
"""

from __future__ import annotations

from dataclasses import dataclass

from graphtopy.core.errors import (
    ConsistencyError,
    InvalidActionError,
    LoopsPresentError,
)
from graphtopy.core.logging import get_logger, log_computation, timed
from graphtopy.graphs.components import is_bipartite
from graphtopy.graphs.models import UndirectedGraph
from graphtopy.zeta.counting import hashimoto_count
from graphtopy.zeta.homs import Walk, closed_walks

from .action import GSetAction, GSetMorphism
from .cayley import cayley_undirected

logger = get_logger(__name__)


@dataclass(frozen=True)
class GaloisComplexData:
    action: GSetAction
    positive: frozenset[str]

    def __post_init__(self) -> None:
        object.__setattr__(self, "positive", frozenset(self.positive))

    @property
    def dimension(self) -> int:
        """n for generators a_0, ..., a_n."""
        return len(self.action.generators) - 1

    @property
    def negative(self) -> frozenset[str]:
        return self.action.carrier - self.positive

    def ensure_valid(self) -> GaloisComplexData:
        """Involutive action whose generators all swap the two colors."""
        self.action.ensure_valid()
        if self.action.kind != "involutive":
            raise InvalidActionError("A complex is a G_n-set", self.action.kind)
        stray = self.positive - self.action.carrier
        if stray:
            raise InvalidActionError("Positive simplex outside the carrier", min(stray))
        for a in self.action.generators:
            for x in self.action.sorted_carrier:
                if (x in self.positive) == (self.action(a, x) in self.positive):
                    raise InvalidActionError(f"{a} does not change the orientation", x)
        return self


def sphere_complex(n: int) -> GaloisComplexData:
    """X_0^n: two n-simplexes glued along every face."""
    swap = {"S+": "S-", "S-": "S+"}
    return GaloisComplexData(
        GSetAction.from_maps(
            ["S+", "S-"], {f"a{i}": swap for i in range(n + 1)}, kind="involutive"
        ),
        frozenset({"S+"}),
    )


def fan_complex(k: int) -> GaloisComplexData:
    """2k triangles "0".."2k-1" around a common vertex, even ones direct.

    a0 pairs 2j with 2j+1 and a1 pairs 2j+1 with 2j+2 (mod 2k), walking round
    the vertex; a2 glues i to 2k-1-i across the outer edges.
    """
    if k < 1:
        raise InvalidActionError("A fan needs at least one pair of triangles", str(k))
    m = 2 * k
    points = [str(i) for i in range(m)]
    a0 = {str(i): str(i ^ 1) for i in range(m)}
    a1 = {str(i): str((i + 1) % m if i % 2 else (i - 1) % m) for i in range(m)}
    a2 = {str(i): str(m - 1 - i) for i in range(m)}
    return GaloisComplexData(
        GSetAction.from_maps(points, {"a0": a0, "a1": a1, "a2": a2}, kind="involutive"),
        frozenset(str(i) for i in range(0, m, 2)),
    )


def plus_action(g: GaloisComplexData) -> GSetAction:
    """F_n acting on the direct simplexes by g_i = a_i after a_0, i = 1..n."""
    g.ensure_valid()
    a0, *rest = g.action.generators
    positive = sorted(g.positive)
    maps = {
        f"g{i}": {x: g.action(a, g.action(a0, x)) for x in positive}
        for i, a in enumerate(rest, start=1)
    }
    return GSetAction.from_maps(positive, maps, kind="free").ensure_valid()


def projection_to_sphere(g: GaloisComplexData) -> GSetMorphism:
    """X -> X_0^n sending each simplex to the one of its orientation."""
    g.ensure_valid()
    target = sphere_complex(g.dimension)
    if target.action.generators != g.action.generators:
        raise InvalidActionError(
            "Generators must be a0..an", ",".join(g.action.generators)
        )
    return GSetMorphism(
        domain=g.action,
        codomain=target.action,
        map={x: "S+" if x in g.positive else "S-" for x in g.action.carrier},
    ).ensure_valid()


# =============================================================================
# Ramification
# =============================================================================


@dataclass(frozen=True)
class RamificationEntry:
    """One primitive cycle of L_n up to rotation and reversal.

    degree is p for a cycle of length 2p whose m colors leave a nonempty
    common face (m <= n), else None. At m == n the common face is a single
    vertex and the entry is flagged.
    """

    cycle: Walk
    length: int
    colors: tuple[str, ...]
    walks: int
    degree: int | None
    vertex_ambiguous: bool

    @property
    def m(self) -> int:
        return len(self.colors)


def _color(h: str) -> str:
    return h.split("@", 1)[0]


def _is_primitive(w: Walk) -> bool:
    size = len(w)
    return all(w[d:] + w[:d] != w for d in range(1, size) if size % d == 0)


def _canonical(x: UndirectedGraph, w: Walk) -> Walk:
    back = tuple(x.inv[e] for e in reversed(w))
    return min(v[d:] + v[:d] for v in (w, back) for d in range(len(w)))


def ramification_profile(g: GaloisComplexData, bound: int) -> list[RamificationEntry]:
    """Primitive non-backtracking cycles of length 2p <= 2*bound in L_n.

    Raises:
        LoopsPresentError: some generator fixes a simplex.
        ConsistencyError: L_n has an odd cycle.
    """
    g.ensure_valid()
    graph = cayley_undirected(g.action)
    if graph.has_loops():
        raise LoopsPresentError("L_n must be loopless", "cayley_undirected")
    if not is_bipartite(graph):
        raise ConsistencyError("L_n is not bipartite")
    n = g.dimension
    entries: list[RamificationEntry] = []
    with timed() as clock:
        for length in range(1, 2 * bound + 1):
            if length % 2:
                if hashimoto_count(graph, length):
                    raise ConsistencyError(f"L_n has a cycle of odd length {length}")
                continue
            classes: dict[Walk, int] = {}
            for w in closed_walks(graph, length, nonbacktracking=True):
                if _is_primitive(w):
                    key = _canonical(graph, w)
                    classes[key] = classes.get(key, 0) + 1
            for cycle, walks in sorted(classes.items()):
                colors = tuple(sorted({_color(h) for h in cycle}))
                entries.append(
                    RamificationEntry(
                        cycle=cycle,
                        length=length,
                        colors=colors,
                        walks=walks,
                        degree=length // 2 if len(colors) <= n else None,
                        vertex_ambiguous=len(colors) == n,
                    )
                )
    log_computation(
        "ramification_profile",
        repr(g.action),
        duration=clock.elapsed,
        details={"bound": bound, "entries": len(entries)},
        logger=logger,
    )
    return entries
