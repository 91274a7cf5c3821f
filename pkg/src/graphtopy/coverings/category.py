"""
Limits, colimits and weak equivalences among coverings of a fixed base X.

covering_pushout quotients Z + Z' by the relation generated by f(y) ~ g(y);
the structure maps descend to a covering of X. covering_weak_equiv is a
bounded check: the induced map on non-backtracking p-cycles is a bijection
for every p up to the bound.
"""

from collections import defaultdict
from dataclasses import dataclass

from graphtopy.core.errors import (
    ConsistencyError,
    InvalidParameterError,
    LoopsPresentError,
    NotACoveringError,
)
from graphtopy.core.logging import get_logger
from graphtopy.graphs.components import connected_components, induced_subgraph
from graphtopy.graphs.limits import pair_id, pullback, pushout
from graphtopy.graphs.models import GraphMorphism, UndirectedGraph, compose
from graphtopy.zeta.homs import (
    BijectivityReport,
    Walk,
    closed_walks,
    counting_bijectivity,
)

from .covering import Covering, covering_diagnostics

logger = get_logger(__name__)


@dataclass(frozen=True)
class CoveringConstruction:
    """An object L of C_X with its legs and its structure covering L -> X."""

    graph: UndirectedGraph
    left: GraphMorphism
    right: GraphMorphism
    structure: Covering


def _agree(a: GraphMorphism, b: GraphMorphism) -> bool:
    return dict(a.f0) == dict(b.f0) and dict(a.f1) == dict(b.f1)


def covering_pushout(
    f: GraphMorphism, g: GraphMorphism, p: Covering, q: Covering
) -> CoveringConstruction:
    """Pushout of Z <-f- Y -g-> Z' over coverings p: Z -> X and q: Z' -> X.

    Raises:
        NotACoveringError: p, q or the common map Y -> X is not a covering,
            or f and g do not commute with them.
    """
    over_left, over_right = compose(p.morphism, f), compose(q.morphism, g)
    if not _agree(over_left, over_right):
        raise NotACoveringError("f and g are not morphisms over the same base")
    Covering.verify(over_left)

    graph, left, right = pushout(f, g)
    f0: dict[str, str] = {}
    f1: dict[str, str] = {}
    for leg, structure in ((left, p.morphism), (right, q.morphism)):
        for z, cls in leg.f0.items():
            if f0.setdefault(cls, structure.f0[z]) != structure.f0[z]:
                raise ConsistencyError("Structure maps disagree on a node class", cls)
        for e, cls in leg.f1.items():
            if f1.setdefault(cls, structure.f1[e]) != structure.f1[e]:
                raise ConsistencyError("Structure maps disagree on an arc class", cls)
    induced = GraphMorphism(domain=graph, codomain=p.base, f0=f0, f1=f1)
    found = covering_diagnostics(induced)
    if found:
        raise ConsistencyError(
            f"Induced map on the pushout is not a covering: {found[0].message}",
            found[0].subject,
        )
    return CoveringConstruction(
        graph, left, right, Covering(induced)  # type: ignore[arg-type]
    )


def covering_pullback(p: Covering, q: Covering) -> CoveringConstruction:
    """Fibered product Z ×_X Z' with its covering to X."""
    graph, left, right = pullback(p.morphism, q.morphism)
    structure = Covering.verify(compose(p.morphism, left))
    return CoveringConstruction(graph, left, right, structure)  # type: ignore[arg-type]


def _refuse_loops(*graphs: UndirectedGraph) -> None:
    for g in graphs:
        if g.has_loops():
            raise LoopsPresentError("Weak equivalence check needs loopless graphs")


@dataclass(frozen=True)
class CoveringWeakEquivalence:
    """Outcome of the bounded check; `bounded` records that it is a proxy."""

    report: BijectivityReport
    bounded: bool = True

    @property
    def holds(self) -> bool:
        return self.report.bijective


def covering_weak_equiv(h: GraphMorphism, bound: int) -> CoveringWeakEquivalence:
    """Bijectivity of h on non-backtracking p-cycles for all p ≤ bound."""
    _refuse_loops(h.domain, h.codomain)  # type: ignore[arg-type]
    found = covering_diagnostics(h)
    if found:
        raise NotACoveringError(found[0].message, found[0].subject)
    return CoveringWeakEquivalence(counting_bijectivity(h, bound, "nonbacktracking"))


# =============================================================================
# Common cover of two colored graphs
# =============================================================================


def _color_word(c: Covering, walk: Walk) -> tuple[str, ...]:
    return tuple(c.morphism.f1[e] for e in walk)


def match_cycles(y: Covering, z: Covering, bound: int) -> dict[Walk, Walk]:
    """Color-respecting bijection between non-backtracking cycles up to bound.

    Raises:
        InvalidParameterError: some color word occurs a different number of
            times on the two sides.
    """
    matching: dict[Walk, Walk] = {}
    for p in range(1, bound + 1):
        by_word: dict[tuple[str, ...], list[list[Walk]]] = defaultdict(
            lambda: [[], []]
        )
        for side, c in enumerate((y, z)):
            for w in closed_walks(c.total, p, nonbacktracking=True):
                by_word[_color_word(c, w)][side].append(w)
        for word, (ys, zs) in sorted(by_word.items()):
            if len(ys) != len(zs):
                raise InvalidParameterError(
                    f"No color-respecting cycle bijection at p={p}", "/".join(word)
                )
            matching.update(zip(ys, zs))
    return matching


@dataclass(frozen=True)
class CommonCover:
    graph: UndirectedGraph
    to_left: Covering
    to_right: Covering
    left_weak: CoveringWeakEquivalence
    right_weak: CoveringWeakEquivalence


def common_cover(
    y: Covering,
    z: Covering,
    bound: int,
    matching: dict[Walk, Walk] | None = None,
) -> CommonCover:
    """L covering both Y and Z over the same base.

    L is the union of the components of Y ×_X Z met by the lifts of matched
    cycle pairs; both projections are then checked with covering_weak_equiv.
    """
    if y.base != z.base:
        raise NotACoveringError("Coverings have different bases")
    if matching is None:
        matching = match_cycles(y, z, bound)
    for wy, wz in matching.items():
        if _color_word(y, wy) != _color_word(z, wz):
            raise InvalidParameterError("Matching does not respect colors", wy[0])

    product, left, right = pullback(y.morphism, z.morphism)
    starts = {
        pair_id(y.total.src[wy[0]], z.total.src[wz[0]]) for wy, wz in matching.items()
    }
    keep = set().union(
        *(block for block in connected_components(product) if block & starts)
    )
    inclusion = induced_subgraph(product, keep)
    to_left = Covering.verify(compose(left, inclusion))
    to_right = Covering.verify(compose(right, inclusion))
    return CommonCover(
        graph=inclusion.domain,  # type: ignore[arg-type]
        to_left=to_left,
        to_right=to_right,
        left_weak=covering_weak_equiv(to_left.morphism, bound),
        right_weak=covering_weak_equiv(to_right.morphism, bound),
    )
