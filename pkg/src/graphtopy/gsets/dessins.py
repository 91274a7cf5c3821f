"""
Dessins d'enfants as finite F_2-sets.

A dessin is a pair of permutations (s0, s1) of a finite set of edges. Its
bipartite map has a white node for every cycle of s0, a black node for every
cycle of s1, and one edge per carrier element joining the two cycles that
contain it. The passport records the cycle types over 0, 1 and infinity.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass

from sympy.combinatorics import Permutation

from graphtopy.core.errors import InvalidActionError
from graphtopy.graphs.models import DirectedGraph, GraphMorphism, UndirectedGraph

from .action import GSetAction
from .cayley import arc_id, cayley_directed

DESSIN_GENERATORS = ("s0", "s1")

Partition = tuple[int, ...]


@dataclass(frozen=True)
class Dessin:
    action: GSetAction

    def __post_init__(self) -> None:
        if self.action.generators != DESSIN_GENERATORS or self.action.kind != "free":
            raise InvalidActionError(
                "A dessin is an F_2-set on generators s0, s1",
                ",".join(self.action.generators),
            )
        self.action.ensure_valid()

    @classmethod
    def from_maps(
        cls,
        carrier: Iterable[str],
        s0: Mapping[str, str],
        s1: Mapping[str, str],
    ) -> Dessin:
        """Missing entries are fixed points."""
        return cls(GSetAction.from_maps(carrier, {"s0": s0, "s1": s1}))

    @property
    def size(self) -> int:
        return len(self.action.carrier)

    def permutations(self) -> tuple[Permutation, Permutation]:
        return self.action.permutation("s0"), self.action.permutation("s1")


def d0() -> Dessin:
    """One edge, both generators trivial."""
    return Dessin.from_maps(["*"], {}, {})


def d1() -> Dessin:
    """Two edges x, y: s0 fixes both, s1 swaps them."""
    return Dessin.from_maps(["x", "y"], {}, {"x": "y", "y": "x"})


def _cycles(d: Dessin, perm: Permutation) -> list[list[str]]:
    names = d.action.sorted_carrier
    cycles = [[names[k] for k in c] for c in perm.full_cyclic_form]
    return sorted(cycles, key=min)


def dessin_bipartite(d: Dessin) -> UndirectedGraph:
    """White nodes "w{k}", black nodes "b{k}", half-arcs "{e}+" white to black."""
    s0, s1 = d.permutations()
    white = {e: f"w{k}" for k, c in enumerate(_cycles(d, s0)) for e in c}
    black = {e: f"b{k}" for k, c in enumerate(_cycles(d, s1)) for e in c}
    halfarcs = []
    for e in d.action.sorted_carrier:
        halfarcs.append((f"{e}+", white[e], black[e], f"{e}-"))
        halfarcs.append((f"{e}-", black[e], white[e], f"{e}+"))
    return UndirectedGraph.build(
        sorted(set(white.values()) | set(black.values())), halfarcs
    )


def _cycle_type(perm: Permutation) -> Partition:
    return tuple(sorted((len(c) for c in perm.full_cyclic_form), reverse=True))


@dataclass(frozen=True)
class Passport:
    zero: Partition
    one: Partition
    infinity: Partition

    def as_lists(self) -> list[list[int]]:
        return [list(self.zero), list(self.one), list(self.infinity)]


def dessin_passport(d: Dessin) -> Passport:
    """Cycle types of s0, s1 and (s0 s1)^-1, with s0 applied first."""
    s0, s1 = d.permutations()
    return Passport(_cycle_type(s0), _cycle_type(s1), _cycle_type(~(s0 * s1)))


def state_collapse() -> GraphMorphism:
    """Cal(D_1) -> Cal(D_0) sending every arc out of x to s0 and out of y to s1.

    Not the image of an equivariant map, but a bijection on closed walks of
    every length: a walk in Cal(D_1) is its sequence of visited nodes.
    """
    source: DirectedGraph = cayley_directed(d1().action)
    target: DirectedGraph = cayley_directed(d0().action)
    color = {"x": "s0", "y": "s1"}
    return GraphMorphism(
        domain=source,
        codomain=target,
        f0={u: "*" for u in source.nodes},
        f1={a: arc_id(color[source.src[a]], "*") for a in source.arcs},
    )
