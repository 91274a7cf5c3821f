"""
Finite G-sets given by named generators acting as permutations.

kind "free": F_n, any permutations. kind "involutive": G_n, every generator
squares to the identity.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from functools import cached_property
from types import MappingProxyType
from typing import Literal

from sympy.combinatorics import Permutation

from graphtopy.core.errors import (
    Diagnostic,
    GeneratorMismatchError,
    InvalidActionError,
)

GroupKind = Literal["free", "involutive"]

CODE = "GT-008"


@dataclass(frozen=True, eq=True)
class GSetAction:
    carrier: frozenset[str]
    generators: tuple[str, ...]
    action: Mapping[str, Mapping[str, str]]
    kind: GroupKind = "free"

    def __post_init__(self) -> None:
        object.__setattr__(self, "carrier", frozenset(self.carrier))
        object.__setattr__(self, "generators", tuple(self.generators))
        object.__setattr__(
            self,
            "action",
            MappingProxyType(
                {a: MappingProxyType(dict(self.action[a])) for a in self.action}
            ),
        )

    __hash__ = None  # type: ignore[assignment]

    @classmethod
    def from_maps(
        cls,
        carrier: Iterable[str],
        maps: Mapping[str, Mapping[str, str]],
        kind: GroupKind = "free",
    ) -> GSetAction:
        """Generators in the order of `maps`; elements missing from a map are fixed."""
        points = frozenset(carrier)
        return cls(
            carrier=points,
            generators=tuple(maps),
            action={a: {x: m.get(x, x) for x in points} for a, m in maps.items()},
            kind=kind,
        )

    @classmethod
    def trivial(cls, generators: Iterable[str], kind: GroupKind = "free") -> GSetAction:
        """The one-point action."""
        return cls.from_maps(["*"], {a: {} for a in generators}, kind)

    @cached_property
    def sorted_carrier(self) -> tuple[str, ...]:
        return tuple(sorted(self.carrier))

    def __call__(self, generator: str, x: str) -> str:
        return self.action[generator][x]

    def permutation(self, generator: str) -> Permutation:
        """The generator as a sympy permutation of sorted carrier indices."""
        index = {x: k for k, x in enumerate(self.sorted_carrier)}
        return Permutation(
            [index[self.action[generator][x]] for x in self.sorted_carrier],
            size=len(index),
        )

    def fixed_points(self, generator: str) -> list[str]:
        return [x for x in self.sorted_carrier if self(generator, x) == x]

    def validate(self) -> list[Diagnostic]:
        found = []
        for a in self.generators:
            table = self.action.get(a)
            if table is None:
                found.append(Diagnostic(CODE, "generator has no action", a))
                continue
            if set(table) != set(self.carrier):
                found.append(Diagnostic(CODE, "action is not total", a))
                continue
            if set(table.values()) != set(self.carrier):
                found.append(Diagnostic(CODE, "action is not a bijection", a))
                continue
            if self.kind == "involutive" and any(
                table[table[x]] != x for x in self.carrier
            ):
                found.append(Diagnostic(CODE, "generator is not an involution", a))
        return found

    def ensure_valid(self) -> GSetAction:
        found = self.validate()
        if found:
            raise InvalidActionError(found[0].message, found[0].subject)
        return self

    def __repr__(self) -> str:
        return (
            f"GSetAction(kind={self.kind}, carrier={len(self.carrier)}, "
            f"generators={list(self.generators)})"
        )


def same_generators(x: GSetAction, y: GSetAction) -> None:
    if x.generators != y.generators:
        raise GeneratorMismatchError(list(x.generators), list(y.generators))


@dataclass(frozen=True, eq=True)
class GSetMorphism:
    """Equivariant map f(a·x) = a·f(x)."""

    domain: GSetAction
    codomain: GSetAction
    map: Mapping[str, str]

    __hash__ = None  # type: ignore[assignment]

    def validate(self) -> list[Diagnostic]:
        same_generators(self.domain, self.codomain)
        found = []
        for x in self.domain.sorted_carrier:
            if self.map.get(x) not in self.codomain.carrier:
                found.append(Diagnostic(CODE, "image missing or outside codomain", x))
        if found:
            return found
        for a in self.domain.generators:
            for x in self.domain.sorted_carrier:
                if self.map[self.domain(a, x)] != self.codomain(a, self.map[x]):
                    found.append(Diagnostic(CODE, f"not equivariant for {a}", x))
        return found

    def ensure_valid(self) -> GSetMorphism:
        found = self.validate()
        if found:
            raise InvalidActionError(found[0].message, found[0].subject)
        return self


def is_loop_free_gset(x: GSetAction) -> bool:
    """No generator fixes a point; then the undirected Cayley graph is loopless."""
    return not any(x.fixed_points(a) for a in x.generators)
