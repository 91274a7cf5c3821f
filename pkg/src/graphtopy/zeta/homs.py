"""
Homomorphism enumeration and cycle families.

enumerate_homs backtracks over node assignments, pruning any partial
assignment that leaves some arc between assigned nodes without an image,
then takes the product of the per-arc candidate lists. Closed walks of
length p are the morphisms out of c_p (or c^p_U), stored as the tuple of
images of the arcs a_n (or half-arcs [n]+).
"""

from collections.abc import Iterator
from itertools import product
from typing import Literal, NamedTuple

from graphtopy.core.errors import FlavorMismatchError, InvalidParameterError
from graphtopy.core.logging import get_logger, log_computation, timed
from graphtopy.graphs.builders import undirected_cycle
from graphtopy.graphs.models import (
    DirectedGraph,
    Graph,
    GraphMorphism,
    NodeId,
    UndirectedGraph,
    compose,
)

logger = get_logger(__name__)

CycleFamily = Literal["directed", "undirected", "nonbacktracking"]


# =============================================================================
# General enumeration
# =============================================================================


class _Slot(NamedTuple):
    """One arc of the domain to be assigned: its id, its ends, its kind."""

    edge: str
    src: NodeId
    tgt: NodeId
    degenerate: bool


def _slots(x: Graph) -> list[_Slot]:
    if isinstance(x, UndirectedGraph):
        return [
            _Slot(h, x.src[h], x.tgt[h], x.is_degenerate(h)) for h in x.arcs
        ]
    return [_Slot(a, x.src[a], x.tgt[a], False) for a in x.sorted_edges]


def _candidates(y: Graph, slot: _Slot, f0: dict[NodeId, NodeId]) -> tuple[str, ...]:
    group = y.between.get((f0[slot.src], f0[slot.tgt]), ())
    if slot.degenerate and isinstance(y, UndirectedGraph):
        return tuple(k for k in group if y.is_degenerate(k))
    return group


def _node_order(x: Graph) -> list[NodeId]:
    """Nodes in breadth-first order so each node meets assigned neighbours."""
    adjacent: dict[NodeId, set[NodeId]] = {u: set() for u in x.sorted_nodes}
    for e in x.edges:
        adjacent[x.src[e]].add(x.tgt[e])
        adjacent[x.tgt[e]].add(x.src[e])
    order: list[NodeId] = []
    seen: set[NodeId] = set()
    for root in x.sorted_nodes:
        if root in seen:
            continue
        queue = [root]
        seen.add(root)
        while queue:
            u = queue.pop(0)
            order.append(u)
            for v in sorted(adjacent[u] - seen):
                seen.add(v)
                queue.append(v)
    return order


def _node_assignments(x: Graph, y: Graph) -> Iterator[dict[NodeId, NodeId]]:
    order = _node_order(x)
    position = {u: k for k, u in enumerate(order)}
    # slots checked as soon as both of their ends are assigned
    ready: dict[NodeId, list[_Slot]] = {u: [] for u in order}
    for slot in _slots(x):
        last = max(slot.src, slot.tgt, key=position.__getitem__)
        ready[last].append(slot)

    f0: dict[NodeId, NodeId] = {}

    def search(depth: int) -> Iterator[dict[NodeId, NodeId]]:
        if depth == len(order):
            yield dict(f0)
            return
        u = order[depth]
        for v in y.sorted_nodes:
            f0[u] = v
            if all(_candidates(y, s, f0) for s in ready[u]):
                yield from search(depth + 1)
            del f0[u]

    yield from search(0)


def _check_flavors(x: Graph, y: Graph) -> None:
    if x.flavor != y.flavor:
        raise FlavorMismatchError()


def iter_homs(x: Graph, y: Graph) -> Iterator[GraphMorphism]:
    """All morphisms x -> y in a deterministic order."""
    _check_flavors(x, y)
    slots = _slots(x)
    for f0 in _node_assignments(x, y):
        options = [_candidates(y, s, f0) for s in slots]
        for choice in product(*options):
            f1: dict[str, str] = {}
            for slot, k in zip(slots, choice):
                f1[slot.edge] = k
                if isinstance(x, UndirectedGraph) and isinstance(y, UndirectedGraph):
                    f1[x.inv[slot.edge]] = y.inv[k]
            yield GraphMorphism(domain=x, codomain=y, f0=f0, f1=f1)


def enumerate_homs(x: Graph, y: Graph) -> list[GraphMorphism]:
    with timed() as clock:
        homs = list(iter_homs(x, y))
    log_computation(
        "enumerate_homs",
        f"{x!r} -> {y!r}",
        duration=clock.elapsed,
        details={"count": len(homs)},
        logger=logger,
    )
    return homs


def count_homs(x: Graph, y: Graph) -> int:
    """|Hom(x, y)| without materializing the morphisms."""
    _check_flavors(x, y)
    slots = _slots(x)
    total = 0
    for f0 in _node_assignments(x, y):
        count = 1
        for s in slots:
            count *= len(_candidates(y, s, f0))
        total += count
    return total


# =============================================================================
# Cycle families
# =============================================================================

Walk = tuple[str, ...]


def _require_positive(p: int) -> None:
    if p < 1:
        raise InvalidParameterError(f"p must be >= 1, got {p}", "p")


def closed_walks(x: Graph, p: int, nonbacktracking: bool = False) -> list[Walk]:
    """Based closed walks (e_0, ..., e_{p-1}) with tgt(e_n) = src(e_{n+1}).

    For undirected graphs each walk is a morphism c^p_U -> x ([n]+ ↦ e_n);
    with `nonbacktracking`, walks where e_{n+1} = inv(e_n) for some n in
    Z/p are dropped.
    """
    _require_positive(p)
    if nonbacktracking and not isinstance(x, UndirectedGraph):
        raise FlavorMismatchError("Backtracking is defined on undirected graphs")
    inv = x.inv if isinstance(x, UndirectedGraph) else None
    walks: list[Walk] = []

    def extend(walk: list[str]) -> None:
        last = walk[-1]
        if len(walk) == p:
            closes = x.tgt[last] == x.src[walk[0]]
            if closes and (not nonbacktracking or walk[0] != inv[last]):
                walks.append(tuple(walk))
            return
        for e in x.out_edges.get(x.tgt[last], ()):
            if nonbacktracking and e == inv[last]:
                continue
            walk.append(e)
            extend(walk)
            walk.pop()

    for e in x.sorted_edges:
        extend([e])
    return walks


def nb_cycles(x: UndirectedGraph, p: int) -> list[GraphMorphism]:
    """Morphisms c^p_U -> x without backtracking; their number is c_p(x)."""
    cycle = undirected_cycle(p)
    return [walk_to_morphism(cycle, x, w) for w in closed_walks(x, p, True)]


def walk_to_morphism(cycle: Graph, x: Graph, walk: Walk) -> GraphMorphism:
    """The morphism c_p -> x (or c^p_U -> x) tracing `walk`."""
    f0 = {str(n): x.src[e] for n, e in enumerate(walk)}
    if isinstance(x, UndirectedGraph):
        f1 = {}
        for n, e in enumerate(walk):
            f1[f"{n}+"], f1[f"{n}-"] = e, x.inv[e]
    else:
        f1 = {f"a{n}": e for n, e in enumerate(walk)}
    return GraphMorphism(domain=cycle, codomain=x, f0=f0, f1=f1)


def family_walks(x: Graph, p: int, family: CycleFamily) -> list[Walk]:
    if family == "directed" and not isinstance(x, DirectedGraph):
        raise FlavorMismatchError("Directed cycle family needs a directed graph")
    if family != "directed" and not isinstance(x, UndirectedGraph):
        raise FlavorMismatchError("Undirected cycle family needs an undirected graph")
    return closed_walks(x, p, nonbacktracking=family == "nonbacktracking")


# =============================================================================
# Counting bijectivity (weak equivalences of morphisms)
# =============================================================================


class BijectivityRow(NamedTuple):
    p: int
    domain: int
    codomain: int
    image: int
    injective: bool

    @property
    def bijective(self) -> bool:
        return self.injective and self.domain == self.image == self.codomain


class BijectivityReport(NamedTuple):
    family: CycleFamily
    bound: int
    rows: list[BijectivityRow]

    @property
    def first_failure(self) -> int | None:
        return next((r.p for r in self.rows if not r.bijective), None)

    @property
    def bijective(self) -> bool:
        return self.first_failure is None


def counting_bijectivity(
    f: GraphMorphism, bound: int, family: CycleFamily = "directed"
) -> BijectivityReport:
    """Check h ↦ f∘h is a bijection Hom(c, X) -> Hom(c, Y) for cycles c up to bound.

    For the non-backtracking family, an image that backtracks counts as
    falling outside the codomain set. Stops at the first failing p.
    """
    rows: list[BijectivityRow] = []
    for p in range(1, bound + 1):
        source = family_walks(f.domain, p, family)
        target = set(family_walks(f.codomain, p, family))
        image = {tuple(f.f1[e] for e in w) for w in source}
        row = BijectivityRow(
            p, len(source), len(target), len(image & target), len(image) == len(source)
        )
        rows.append(row)
        if not row.bijective:
            logger.debug("Counting bijectivity fails", p=p, family=family)
            break
    return BijectivityReport(family, bound, rows)


class TwoOutOfThree(NamedTuple):
    f: bool
    g: bool
    composite: bool

    @property
    def holds(self) -> bool:
        """Any two bijective forces the third."""
        return sum((self.f, self.g, self.composite)) != 2


def two_out_of_three(
    f: GraphMorphism, g: GraphMorphism, bound: int, family: CycleFamily = "directed"
) -> TwoOutOfThree:
    return TwoOutOfThree(
        counting_bijectivity(f, bound, family).bijective,
        counting_bijectivity(g, bound, family).bijective,
        counting_bijectivity(compose(g, f), bound, family).bijective,
    )
