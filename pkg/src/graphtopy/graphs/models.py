"""
Presheaf graphs and their morphisms.

A directed graph is a presheaf on the two-object category with arrows
s, t: 0 -> 1; an undirected graph additionally carries an involution i of the
half-arcs with s∘i = t. Both are stored as explicit finite tables and are
immutable once built.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from functools import cached_property
from types import MappingProxyType
from typing import ClassVar, Literal, TypeAlias

from graphtopy.core.errors import InvalidParameterError

Flavor = Literal["directed", "undirected"]

NodeId: TypeAlias = str
ArcId: TypeAlias = str
HalfArcId: TypeAlias = str


def _frozen_map(data: Mapping[str, str]) -> Mapping[str, str]:
    return MappingProxyType(dict(data))


@dataclass(frozen=True, eq=True)
class DirectedGraph:
    """Finite presheaf on C_D: nodes, arcs, source and target tables."""

    nodes: frozenset[NodeId]
    arcs: frozenset[ArcId]
    src: Mapping[ArcId, NodeId]
    tgt: Mapping[ArcId, NodeId]

    flavor: ClassVar[Flavor] = "directed"

    def __post_init__(self) -> None:
        object.__setattr__(self, "nodes", frozenset(self.nodes))
        object.__setattr__(self, "arcs", frozenset(self.arcs))
        object.__setattr__(self, "src", _frozen_map(self.src))
        object.__setattr__(self, "tgt", _frozen_map(self.tgt))

    __hash__ = None  # type: ignore[assignment]

    @classmethod
    def build(
        cls,
        nodes: Iterable[NodeId],
        arcs: Iterable[tuple[ArcId, NodeId, NodeId]],
    ) -> DirectedGraph:
        """Build from a node list and (id, source, target) triples."""
        arc_list = list(arcs)
        return cls(
            nodes=frozenset(nodes),
            arcs=frozenset(a for a, _, _ in arc_list),
            src={a: s for a, s, _ in arc_list},
            tgt={a: t for a, _, t in arc_list},
        )

    @cached_property
    def sorted_nodes(self) -> tuple[NodeId, ...]:
        return tuple(sorted(self.nodes))

    @cached_property
    def sorted_edges(self) -> tuple[ArcId, ...]:
        return tuple(sorted(self.arcs))

    @property
    def edges(self) -> frozenset[ArcId]:
        """X(1): the arcs."""
        return self.arcs

    @cached_property
    def between(self) -> Mapping[tuple[NodeId, NodeId], tuple[ArcId, ...]]:
        """Arcs grouped by (source, target), each group sorted."""
        table: dict[tuple[NodeId, NodeId], list[ArcId]] = {}
        for a in self.sorted_edges:
            table.setdefault((self.src[a], self.tgt[a]), []).append(a)
        return MappingProxyType({k: tuple(v) for k, v in table.items()})

    @cached_property
    def out_edges(self) -> Mapping[NodeId, tuple[ArcId, ...]]:
        table: dict[NodeId, list[ArcId]] = {x: [] for x in self.sorted_nodes}
        for a in self.sorted_edges:
            table.setdefault(self.src[a], []).append(a)
        return MappingProxyType({k: tuple(v) for k, v in table.items()})

    def has_loops(self) -> bool:
        return any(self.src[a] == self.tgt[a] for a in self.arcs)

    def __repr__(self) -> str:
        return f"DirectedGraph(nodes={len(self.nodes)}, arcs={len(self.arcs)})"


@dataclass(frozen=True, eq=True)
class UndirectedGraph:
    """Finite presheaf on C_U: nodes, half-arcs, source, target, involution.

    Half-arcs fixed by the involution are degenerate loops.
    """

    nodes: frozenset[NodeId]
    halfarcs: frozenset[HalfArcId]
    src: Mapping[HalfArcId, NodeId]
    tgt: Mapping[HalfArcId, NodeId]
    inv: Mapping[HalfArcId, HalfArcId]

    flavor: ClassVar[Flavor] = "undirected"

    def __post_init__(self) -> None:
        object.__setattr__(self, "nodes", frozenset(self.nodes))
        object.__setattr__(self, "halfarcs", frozenset(self.halfarcs))
        object.__setattr__(self, "src", _frozen_map(self.src))
        object.__setattr__(self, "tgt", _frozen_map(self.tgt))
        object.__setattr__(self, "inv", _frozen_map(self.inv))

    __hash__ = None  # type: ignore[assignment]

    @classmethod
    def build(
        cls,
        nodes: Iterable[NodeId],
        halfarcs: Iterable[tuple[HalfArcId, NodeId, NodeId, HalfArcId]],
    ) -> UndirectedGraph:
        """Build from a node list and (id, source, target, inverse) tuples."""
        rows = list(halfarcs)
        return cls(
            nodes=frozenset(nodes),
            halfarcs=frozenset(h for h, _, _, _ in rows),
            src={h: s for h, s, _, _ in rows},
            tgt={h: t for h, _, t, _ in rows},
            inv={h: i for h, _, _, i in rows},
        )

    @classmethod
    def from_edges(
        cls,
        nodes: Iterable[NodeId],
        edges: Iterable[tuple[NodeId, NodeId]],
        prefix: str = "e",
    ) -> UndirectedGraph:
        """Build with one arc per (u, v) pair; half-arcs `{prefix}{k}+/-`.

        A pair (u, u) gives a non-degenerate loop (two half-arcs).
        """
        rows = []
        for k, (u, v) in enumerate(edges):
            plus, minus = f"{prefix}{k}+", f"{prefix}{k}-"
            rows.append((plus, u, v, minus))
            rows.append((minus, v, u, plus))
        return cls.build(nodes, rows)

    @cached_property
    def sorted_nodes(self) -> tuple[NodeId, ...]:
        return tuple(sorted(self.nodes))

    @cached_property
    def sorted_edges(self) -> tuple[HalfArcId, ...]:
        return tuple(sorted(self.halfarcs))

    @property
    def edges(self) -> frozenset[HalfArcId]:
        """X(1): the half-arcs."""
        return self.halfarcs

    def is_degenerate(self, h: HalfArcId) -> bool:
        return self.inv[h] == h

    def arc_of(self, h: HalfArcId) -> HalfArcId:
        """Canonical representative of the arc (h, i(h))."""
        return min(h, self.inv[h])

    @cached_property
    def arcs(self) -> tuple[HalfArcId, ...]:
        """Arc(X): one representative per involution orbit, sorted."""
        return tuple(sorted({self.arc_of(h) for h in self.halfarcs}))

    @cached_property
    def between(self) -> Mapping[tuple[NodeId, NodeId], tuple[HalfArcId, ...]]:
        """Half-arcs grouped by (source, target), each group sorted."""
        table: dict[tuple[NodeId, NodeId], list[HalfArcId]] = {}
        for h in self.sorted_edges:
            table.setdefault((self.src[h], self.tgt[h]), []).append(h)
        return MappingProxyType({k: tuple(v) for k, v in table.items()})

    @cached_property
    def out_edges(self) -> Mapping[NodeId, tuple[HalfArcId, ...]]:
        table: dict[NodeId, list[HalfArcId]] = {x: [] for x in self.sorted_nodes}
        for h in self.sorted_edges:
            table.setdefault(self.src[h], []).append(h)
        return MappingProxyType({k: tuple(v) for k, v in table.items()})

    def has_loops(self) -> bool:
        """True when some arc has equal ends (degenerate or not)."""
        return any(self.src[h] == self.tgt[h] for h in self.halfarcs)

    def __repr__(self) -> str:
        return (
            f"UndirectedGraph(nodes={len(self.nodes)}, "
            f"halfarcs={len(self.halfarcs)}, arcs={len(self.arcs)})"
        )


Graph: TypeAlias = DirectedGraph | UndirectedGraph


@dataclass(frozen=True)
class Star:
    """X(x,*): the arcs having x as an end, as canonical representatives."""

    node: NodeId
    arcs: frozenset[HalfArcId]

    def __len__(self) -> int:
        return len(self.arcs)


@dataclass(frozen=True, eq=True)
class GraphMorphism:
    """Natural transformation between two graphs of the same flavor."""

    domain: Graph
    codomain: Graph
    f0: Mapping[NodeId, NodeId] = field(default_factory=dict)
    f1: Mapping[str, str] = field(default_factory=dict)

    def __post_init__(self) -> None:
        object.__setattr__(self, "f0", _frozen_map(self.f0))
        object.__setattr__(self, "f1", _frozen_map(self.f1))

    __hash__ = None  # type: ignore[assignment]

    @property
    def flavor(self) -> Flavor:
        return self.domain.flavor

    @cached_property
    def key(self) -> tuple[tuple[str, ...], tuple[str, ...]]:
        """Hashable fingerprint: images in sorted domain order."""
        return (
            tuple(self.f0[x] for x in self.domain.sorted_nodes),
            tuple(self.f1[e] for e in self.domain.sorted_edges),
        )

    def is_invertible(self) -> bool:
        return (
            len(self.domain.nodes) == len(self.codomain.nodes)
            and len(self.domain.edges) == len(self.codomain.edges)
            and set(self.f0.values()) == set(self.codomain.nodes)
            and set(self.f1.values()) == set(self.codomain.edges)
        )

    def inverse(self) -> GraphMorphism:
        if not self.is_invertible():
            raise InvalidParameterError("Morphism is not invertible")
        return GraphMorphism(
            domain=self.codomain,
            codomain=self.domain,
            f0={v: k for k, v in self.f0.items()},
            f1={v: k for k, v in self.f1.items()},
        )

    def __repr__(self) -> str:
        return f"GraphMorphism({self.domain!r} -> {self.codomain!r})"


def identity(x: Graph) -> GraphMorphism:
    return GraphMorphism(
        domain=x,
        codomain=x,
        f0={n: n for n in x.nodes},
        f1={e: e for e in x.edges},
    )


def compose(g: GraphMorphism, f: GraphMorphism) -> GraphMorphism:
    """g ∘ f."""
    return GraphMorphism(
        domain=f.domain,
        codomain=g.codomain,
        f0={x: g.f0[y] for x, y in f.f0.items()},
        f1={e: g.f1[d] for e, d in f.f1.items()},
    )


def star(g: UndirectedGraph, x: NodeId) -> Star:
    """Arcs of g with x as an end; loops count once."""
    if x not in g.nodes:
        raise KeyError(f"Unknown node: {x}")
    return Star(
        node=x,
        arcs=frozenset(
            g.arc_of(h) for h in g.halfarcs if g.src[h] == x or g.tgt[h] == x
        ),
    )


def degree(g: UndirectedGraph, x: NodeId) -> int:
    return len(star(g, x))
