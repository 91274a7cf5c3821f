"""Presheaf graphs: models, validation, builders, isomorphism, (co)limits."""

from .builders import (
    GRAPH_KINDS,
    cherry_to_digon,
    cycle_quotient,
    digon_to_arc,
    elementary_folding,
    standard_graph,
)
from .components import (
    bipartition,
    connected_components,
    induced_subgraph,
    is_bipartite,
    is_connected,
)
from .isomorphism import is_isomorphic
from .limits import Construction, empty, graph_sum, product, pullback, pushout, terminal
from .models import (
    DirectedGraph,
    Flavor,
    Graph,
    GraphMorphism,
    Star,
    UndirectedGraph,
    compose,
    degree,
    identity,
    star,
)
from .serialization import (
    graph_to_json,
    morphism_to_json,
    parse_graph,
    parse_morphism,
)
from .validation import (
    ensure_valid,
    ensure_valid_morphism,
    validate,
    validate_directed,
    validate_morphism,
    validate_undirected,
)

__all__ = [
    "DirectedGraph",
    "UndirectedGraph",
    "Graph",
    "Flavor",
    "GraphMorphism",
    "Star",
    "identity",
    "compose",
    "star",
    "degree",
    "validate",
    "validate_directed",
    "validate_undirected",
    "validate_morphism",
    "ensure_valid",
    "ensure_valid_morphism",
    "standard_graph",
    "GRAPH_KINDS",
    "elementary_folding",
    "cherry_to_digon",
    "digon_to_arc",
    "cycle_quotient",
    "is_isomorphic",
    "Construction",
    "graph_sum",
    "product",
    "pushout",
    "pullback",
    "empty",
    "terminal",
    "connected_components",
    "is_connected",
    "is_bipartite",
    "bipartition",
    "induced_subgraph",
    "graph_to_json",
    "morphism_to_json",
    "parse_graph",
    "parse_morphism",
]
