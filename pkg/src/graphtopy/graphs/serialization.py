"""JSON documents for graphs and morphisms.

Documents are pydantic models; field order is the canonical key order and
every list is emitted sorted, so serialization is deterministic.
"""

import json
from collections import Counter
from typing import Annotated, Any, Literal

from pydantic import BaseModel, ConfigDict, Field, TypeAdapter, ValidationError

from graphtopy.core.errors import InputFormatError

from .models import DirectedGraph, Graph, GraphMorphism, UndirectedGraph


class ArcDocument(BaseModel):
    model_config = ConfigDict(extra="forbid")

    id: str
    src: str
    tgt: str


class HalfArcDocument(BaseModel):
    model_config = ConfigDict(extra="forbid")

    id: str
    src: str
    tgt: str
    inv: str


class DirectedGraphDocument(BaseModel):
    """{"flavor":"directed","nodes":[...],"arcs":[{"id","src","tgt"}]}"""

    model_config = ConfigDict(extra="forbid")

    flavor: Literal["directed"] = "directed"
    nodes: list[str]
    arcs: list[ArcDocument] = Field(default_factory=list)


class UndirectedGraphDocument(BaseModel):
    """{"flavor":"undirected","nodes":[...],"halfarcs":[{"id","src","tgt","inv"}]}"""

    model_config = ConfigDict(extra="forbid")

    flavor: Literal["undirected"] = "undirected"
    nodes: list[str]
    halfarcs: list[HalfArcDocument] = Field(default_factory=list)


GraphDocument = Annotated[
    DirectedGraphDocument | UndirectedGraphDocument, Field(discriminator="flavor")
]

_graph_adapter: TypeAdapter[DirectedGraphDocument | UndirectedGraphDocument] = (
    TypeAdapter(GraphDocument)
)


class MapDocument(BaseModel):
    model_config = ConfigDict(extra="forbid")

    nodes: dict[str, str]
    halfarcs: dict[str, str] | None = None
    arcs: dict[str, str] | None = None


class MorphismDocument(BaseModel):
    """{"map":{"nodes":{...},"halfarcs":{...}},"base":...,"total":...}

    `total` is the domain and `base` the codomain; directed morphisms use
    "arcs" instead of "halfarcs".
    """

    model_config = ConfigDict(extra="forbid")

    map: MapDocument
    base: GraphDocument
    total: GraphDocument


# =============================================================================
# Graph <-> document
# =============================================================================


def to_document(g: Graph) -> DirectedGraphDocument | UndirectedGraphDocument:
    if isinstance(g, UndirectedGraph):
        return UndirectedGraphDocument(
            nodes=list(g.sorted_nodes),
            halfarcs=[
                HalfArcDocument(id=h, src=g.src[h], tgt=g.tgt[h], inv=g.inv[h])
                for h in g.sorted_edges
            ],
        )
    return DirectedGraphDocument(
        nodes=list(g.sorted_nodes),
        arcs=[ArcDocument(id=a, src=g.src[a], tgt=g.tgt[a]) for a in g.sorted_edges],
    )


def _duplicates(ids: list[str]) -> list[str]:
    return sorted(i for i, k in Counter(ids).items() if k > 1)


def from_document(doc: DirectedGraphDocument | UndirectedGraphDocument) -> Graph:
    """Build the graph; structure is NOT validated here (see validation)."""
    ids = [a.id for a in (doc.halfarcs if doc.flavor == "undirected" else doc.arcs)]
    for label, dup in (("node", _duplicates(doc.nodes)), ("edge", _duplicates(ids))):
        if dup:
            raise InputFormatError(f"Duplicate {label} id: {dup[0]}")
    if isinstance(doc, UndirectedGraphDocument):
        return UndirectedGraph.build(
            doc.nodes, [(h.id, h.src, h.tgt, h.inv) for h in doc.halfarcs]
        )
    return DirectedGraph.build(doc.nodes, [(a.id, a.src, a.tgt) for a in doc.arcs])


def graph_to_json(g: Graph) -> str:
    return to_document(g).model_dump_json()


def morphism_to_document(f: GraphMorphism) -> MorphismDocument:
    edges = {e: f.f1[e] for e in f.domain.sorted_edges}
    nodes = {n: f.f0[n] for n in f.domain.sorted_nodes}
    if f.flavor == "undirected":
        mapping = MapDocument(nodes=nodes, halfarcs=edges)
    else:
        mapping = MapDocument(nodes=nodes, arcs=edges)
    return MorphismDocument(
        map=mapping, base=to_document(f.codomain), total=to_document(f.domain)
    )


def morphism_to_json(f: GraphMorphism) -> str:
    return morphism_to_document(f).model_dump_json(exclude_none=True)


def morphism_from_document(doc: MorphismDocument) -> GraphMorphism:
    if doc.base.flavor != doc.total.flavor:
        raise InputFormatError("base and total have different flavors")
    edges = doc.map.halfarcs if doc.total.flavor == "undirected" else doc.map.arcs
    return GraphMorphism(
        domain=from_document(doc.total),
        codomain=from_document(doc.base),
        f0=doc.map.nodes,
        f1=edges or {},
    )


# =============================================================================
# Text parsing with positions
# =============================================================================


def load_json(text: str, source: str = "<input>") -> Any:
    """json.loads with an InputFormatError carrying line and column."""
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise InputFormatError(
            f"Malformed JSON: {e.msg}", source=source, line=e.lineno, column=e.colno
        ) from e


def schema_error(e: ValidationError, source: str) -> InputFormatError:
    first = e.errors()[0]
    where = ".".join(str(p) for p in first["loc"]) or "<root>"
    return InputFormatError(f"{where}: {first['msg']}", source=source)


def parse_graph(text: str, source: str = "<input>") -> Graph:
    data = load_json(text, source)
    try:
        doc = _graph_adapter.validate_python(data)
    except ValidationError as e:
        raise schema_error(e, source) from e
    return from_document(doc)


def parse_morphism(text: str, source: str = "<input>") -> GraphMorphism:
    data = load_json(text, source)
    try:
        doc = MorphismDocument.model_validate(data)
    except ValidationError as e:
        raise schema_error(e, source) from e
    return morphism_from_document(doc)
