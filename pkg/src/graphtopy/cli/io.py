"""Input files and output emission for the CLI verbs."""

from __future__ import annotations

import argparse
import sys
from collections.abc import Callable
from pathlib import Path

from pydantic import BaseModel

from graphtopy.core.errors import Diagnostic, FlavorMismatchError, InputFormatError
from graphtopy.graphs.models import DirectedGraph, Graph, GraphMorphism, UndirectedGraph
from graphtopy.graphs.serialization import parse_graph, parse_morphism
from graphtopy.graphs.validation import ensure_valid, ensure_valid_morphism
from graphtopy.gsets.action import GSetAction
from graphtopy.gsets.dessins import Dessin
from graphtopy.gsets.galois import GaloisComplexData
from graphtopy.gsets.serialization import parse_dessin, parse_galois_complex, parse_gset

from .utils import print_json


def read_text(path: str) -> str:
    """File contents; "-" reads standard input."""
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise InputFormatError(f"Cannot read input: {e.strerror}", source=path) from e


def load_graph(path: str, strict: bool = True) -> Graph:
    """Parse a graph document; `strict` raises GT-001 on a malformed structure."""
    g = parse_graph(read_text(path), source=path)
    return ensure_valid(g) if strict else g


def load_directed(path: str) -> DirectedGraph:
    g = load_graph(path)
    if not isinstance(g, DirectedGraph):
        raise FlavorMismatchError(f"{path}: expected a directed graph")
    return g


def load_undirected(path: str) -> UndirectedGraph:
    g = load_graph(path)
    if not isinstance(g, UndirectedGraph):
        raise FlavorMismatchError(f"{path}: expected an undirected graph")
    return g


def load_morphism(path: str, strict: bool = True) -> GraphMorphism:
    f = parse_morphism(read_text(path), source=path)
    return ensure_valid_morphism(f) if strict else f


def load_gset(path: str) -> GSetAction:
    return parse_gset(read_text(path), source=path)


def load_dessin(path: str) -> Dessin:
    return parse_dessin(read_text(path), source=path)


def load_galois_complex(path: str) -> GaloisComplexData:
    return parse_galois_complex(read_text(path), source=path)


def emit(
    args: argparse.Namespace, result: BaseModel, render: Callable[[], None]
) -> None:
    """JSON document for --format json, otherwise the text renderer."""
    if args.format == "json":
        print_json(result.model_dump_json())
    else:
        render()


def positive_int(text: str) -> int:
    """argparse type for bounds: an integer >= 1."""
    try:
        value = int(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from e
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def diagnostics_payload(found: list[Diagnostic]) -> list[dict]:
    return [d.to_dict() for d in found]
