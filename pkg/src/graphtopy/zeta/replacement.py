"""
Truncated cofibrant replacement of a directed graph.

Up to cycle length L the replacement is the sum ⊕ m_ℓ·c_ℓ, where m_ℓ counts
primitive closed walks of length ℓ up to rotation:

    m_ℓ = (1/ℓ) Σ_{d|ℓ} μ(ℓ/d)·n_d

so that n_p = Σ_{ℓ|p} ℓ·m_ℓ for every p ≤ L.
"""

from dataclasses import dataclass
from math import prod

from sympy import divisors
from sympy.functions.combinatorial.numbers import mobius

from graphtopy.core.errors import ConsistencyError, InvalidParameterError
from graphtopy.graphs.models import DirectedGraph

from .counting import cycle_count_vector


@dataclass(frozen=True)
class PrimitiveMultiplicities:
    bound: int
    multiplicities: dict[int, int]
    counts: dict[int, int]

    def __getitem__(self, length: int) -> int:
        return self.multiplicities[length]

    def reconstruct(self, p: int) -> int:
        """Σ_{ℓ|p} ℓ·m_ℓ."""
        return sum(d * self.multiplicities[d] for d in divisors(p))

    def nonzero(self) -> dict[int, int]:
        return {k: m for k, m in self.multiplicities.items() if m}


def primitive_multiplicities(x: DirectedGraph, bound: int) -> PrimitiveMultiplicities:
    """Möbius inversion of n_p; raises ConsistencyError on a non-integral result."""
    if bound < 1:
        raise InvalidParameterError(f"bound must be >= 1, got {bound}", "L")
    counts = cycle_count_vector(x, bound)
    multiplicities: dict[int, int] = {}
    for length in range(1, bound + 1):
        total = sum(int(mobius(length // d)) * counts[d] for d in divisors(length))
        if total % length or total < 0:
            raise ConsistencyError(
                f"m_{length} = {total}/{length} is not a nonnegative integer"
            )
        multiplicities[length] = int(total) // length
    result = PrimitiveMultiplicities(bound, multiplicities, counts)
    for p in range(1, bound + 1):
        if result.reconstruct(p) != counts[p]:
            raise ConsistencyError(f"reconstruction fails at p={p}")
    return result


@dataclass(frozen=True)
class ProfileEntry:
    """Summand c_ℓ of the source, its multiplicity, and |Hom(c_ℓ, target)|."""

    length: int
    multiplicity: int
    homs: int


@dataclass(frozen=True)
class HomotopyHomProfile:
    bound: int
    entries: list[ProfileEntry]

    def as_table(self) -> dict[int, int]:
        return {e.length: e.homs for e in self.entries}

    @property
    def total(self) -> int:
        """|Hom| of the truncated replacements: product over summands."""
        return prod(e.homs**e.multiplicity for e in self.entries)


def homotopy_hom_profile(
    x: DirectedGraph, y: DirectedGraph, bound: int
) -> HomotopyHomProfile:
    """For each c_ℓ in the truncated C(x): Σ_{k|ℓ, k≤L} k·m_k(y)."""
    mx = primitive_multiplicities(x, bound)
    my = primitive_multiplicities(y, bound)
    entries = [
        ProfileEntry(
            length=length,
            multiplicity=m,
            homs=sum(k * my[k] for k in divisors(length) if k <= bound),
        )
        for length, m in sorted(mx.nonzero().items())
    ]
    return HomotopyHomProfile(bound, entries)
