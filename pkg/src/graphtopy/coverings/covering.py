"""
Covering morphisms of undirected graphs.

A morphism f: Y -> X is a covering when, for every node y, the star map
sending the half-arcs leaving y to the half-arcs leaving f0(y) is a
bijection. On loopless graphs this is the arc-star map Y(y,*) -> X(f0(y),*);
a degenerate loop contributes one half-arc and a non-degenerate loop two.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from graphtopy.core.errors import (
    ConsistencyError,
    Diagnostic,
    DisconnectedGraphError,
    FlavorMismatchError,
    NotACoveringError,
)
from graphtopy.core.logging import get_logger
from graphtopy.graphs.components import is_connected
from graphtopy.graphs.models import GraphMorphism, UndirectedGraph, compose
from graphtopy.graphs.validation import validate_morphism

logger = get_logger(__name__)

CODE = "GT-006"


def covering_diagnostics(f: GraphMorphism) -> list[Diagnostic]:
    """Per-node star failures; empty iff f is a covering."""
    y, x = f.domain, f.codomain
    if not isinstance(y, UndirectedGraph) or not isinstance(x, UndirectedGraph):
        raise FlavorMismatchError("Coverings are defined on undirected graphs")
    found = list(validate_morphism(f))
    if found:
        return found
    for node in y.sorted_nodes:
        leaving = y.out_edges[node]
        images = [f.f1[h] for h in leaving]
        target = set(x.out_edges[f.f0[node]])
        repeated = sorted(k for k, c in Counter(images).items() if c > 1)
        missing = sorted(target - set(images))
        if repeated:
            found.append(
                Diagnostic(CODE, f"star map not injective onto {repeated}", node)
            )
        if missing:
            found.append(
                Diagnostic(CODE, f"star map not surjective, missing {missing}", node)
            )
    return found


def is_covering(f: GraphMorphism) -> bool:
    return not covering_diagnostics(f)


@dataclass(frozen=True)
class Covering:
    """A morphism verified to be a covering."""

    morphism: GraphMorphism
    verified: bool = True

    @classmethod
    def verify(cls, f: GraphMorphism) -> Covering:
        """Raises NotACoveringError with the first failing node."""
        found = covering_diagnostics(f)
        if found:
            raise NotACoveringError(found[0].message, found[0].subject)
        return cls(f)

    @property
    def total(self) -> UndirectedGraph:
        return self.morphism.domain  # type: ignore[return-value]

    @property
    def base(self) -> UndirectedGraph:
        return self.morphism.codomain  # type: ignore[return-value]

    def fiber(self, x: str) -> list[str]:
        return sorted(y for y, image in self.morphism.f0.items() if image == x)


def covering_degree(c: Covering) -> int:
    """Common fiber size; defined for connected bases only."""
    if not is_connected(c.base):
        raise DisconnectedGraphError("Degree needs a connected base")
    sizes = {len(c.fiber(x)) for x in c.base.nodes}
    if len(sizes) != 1:
        raise ConsistencyError(f"Fibers of a covering differ in size: {sorted(sizes)}")
    return sizes.pop()


def compose_coverings(g: Covering, f: Covering) -> Covering:
    """g ∘ f, checked."""
    return Covering.verify(compose(g.morphism, f.morphism))
