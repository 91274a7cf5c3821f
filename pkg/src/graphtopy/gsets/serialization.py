"""JSON documents for G-sets, dessins and Galoisian complexes.

{"kind":"free","carrier":[...],"generators":{"a0":{"x":"y",...},...}}

Generator order is the key order of "generators". Complexes add
"positive": the direct simplexes.
"""

from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, ValidationError

from graphtopy.core.errors import InputFormatError
from graphtopy.graphs.serialization import load_json, schema_error

from .action import GSetAction
from .dessins import Dessin
from .galois import GaloisComplexData


class GSetDocument(BaseModel):
    model_config = ConfigDict(extra="forbid")

    kind: Literal["free", "involutive"] = "free"
    carrier: list[str]
    generators: dict[str, dict[str, str]] = Field(default_factory=dict)


class GaloisComplexDocument(GSetDocument):
    kind: Literal["involutive"] = "involutive"
    positive: list[str]


def gset_to_document(x: GSetAction) -> GSetDocument:
    return GSetDocument(
        kind=x.kind,
        carrier=list(x.sorted_carrier),
        generators={a: {p: x(a, p) for p in x.sorted_carrier} for a in x.generators},
    )


def gset_to_json(x: GSetAction) -> str:
    return gset_to_document(x).model_dump_json()


def gset_from_document(doc: GSetDocument) -> GSetAction:
    """Maps must be total; validation reports missing or non-bijective entries."""
    if len(set(doc.carrier)) != len(doc.carrier):
        raise InputFormatError("Duplicate carrier element")
    return GSetAction(
        carrier=frozenset(doc.carrier),
        generators=tuple(doc.generators),
        action=doc.generators,
        kind=doc.kind,
    ).ensure_valid()


def _validate(model: type[GSetDocument], text: str, source: str) -> GSetDocument:
    data = load_json(text, source)
    try:
        return model.model_validate(data)
    except ValidationError as e:
        raise schema_error(e, source) from e


def parse_gset(text: str, source: str = "<input>") -> GSetAction:
    return gset_from_document(_validate(GSetDocument, text, source))


def parse_dessin(text: str, source: str = "<input>") -> Dessin:
    return Dessin(parse_gset(text, source))


def parse_galois_complex(text: str, source: str = "<input>") -> GaloisComplexData:
    doc = _validate(GaloisComplexDocument, text, source)
    return GaloisComplexData(
        gset_from_document(doc), frozenset(doc.positive)  # type: ignore[attr-defined]
    ).ensure_valid()


def galois_complex_to_json(g: GaloisComplexData) -> str:
    base = gset_to_document(g.action)
    return GaloisComplexDocument(
        carrier=base.carrier, generators=base.generators, positive=sorted(g.positive)
    ).model_dump_json()
