"""G-sets, Cayley functors, dessins d'enfants and Galoisian complexes."""

from .action import (
    GroupKind,
    GSetAction,
    GSetMorphism,
    is_loop_free_gset,
    same_generators,
)
from .cayley import (
    arc_id,
    cayley_directed,
    cayley_directed_map,
    cayley_undirected,
    cayley_undirected_map,
    colored_to_gset,
)
from .dessins import (
    Dessin,
    Passport,
    d0,
    d1,
    dessin_bipartite,
    dessin_passport,
    state_collapse,
)
from .galois import (
    GaloisComplexData,
    RamificationEntry,
    fan_complex,
    plus_action,
    projection_to_sphere,
    ramification_profile,
    sphere_complex,
)
from .homotopy import (
    CofibrancyVerdict,
    is_cofibrant_fnset,
    weak_equiv_gset_morphism,
    weak_equiv_gsets,
)
from .serialization import (
    GaloisComplexDocument,
    GSetDocument,
    galois_complex_to_json,
    gset_to_document,
    gset_to_json,
    parse_dessin,
    parse_galois_complex,
    parse_gset,
)

__all__ = [
    "GroupKind",
    "GSetAction",
    "GSetMorphism",
    "same_generators",
    "is_loop_free_gset",
    "arc_id",
    "cayley_directed",
    "cayley_undirected",
    "cayley_directed_map",
    "cayley_undirected_map",
    "colored_to_gset",
    "Dessin",
    "Passport",
    "d0",
    "d1",
    "dessin_bipartite",
    "dessin_passport",
    "state_collapse",
    "GaloisComplexData",
    "RamificationEntry",
    "sphere_complex",
    "fan_complex",
    "plus_action",
    "projection_to_sphere",
    "ramification_profile",
    "CofibrancyVerdict",
    "is_cofibrant_fnset",
    "weak_equiv_gsets",
    "weak_equiv_gset_morphism",
    "GSetDocument",
    "GaloisComplexDocument",
    "gset_to_document",
    "gset_to_json",
    "parse_gset",
    "parse_dessin",
    "parse_galois_complex",
    "galois_complex_to_json",
]
