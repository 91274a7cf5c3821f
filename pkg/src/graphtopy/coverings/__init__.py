"""Coverings, R_X^p extensions, edge colorings, covering (co)limits."""

from .category import (
    CommonCover,
    CoveringConstruction,
    CoveringWeakEquivalence,
    common_cover,
    covering_pullback,
    covering_pushout,
    covering_weak_equiv,
    match_cycles,
)
from .coloring import (
    coloring_of,
    edge_coloring,
    find_bipartite_coloring,
    find_n_coloring,
)
from .covering import (
    Covering,
    compose_coverings,
    covering_degree,
    covering_diagnostics,
    is_covering,
)
from .rxp import RXpExtension, RXpObject, extend_cycle_to_rxp

__all__ = [
    "Covering",
    "is_covering",
    "covering_diagnostics",
    "covering_degree",
    "compose_coverings",
    "RXpObject",
    "RXpExtension",
    "extend_cycle_to_rxp",
    "edge_coloring",
    "find_n_coloring",
    "find_bipartite_coloring",
    "coloring_of",
    "CoveringConstruction",
    "covering_pushout",
    "covering_pullback",
    "CoveringWeakEquivalence",
    "covering_weak_equiv",
    "match_cycles",
    "CommonCover",
    "common_cover",
]
