"""
extend 명령 - covering 위의 비역행 순환을 R_X^p 대상으로 확장.
"""

from __future__ import annotations

import argparse

from pydantic import BaseModel, TypeAdapter, ValidationError

from graphtopy.core.config import CountingLimits
from graphtopy.coverings.covering import Covering
from graphtopy.coverings.rxp import extend_cycle_to_rxp
from graphtopy.graphs.builders import undirected_cycle
from graphtopy.graphs.serialization import load_json, schema_error, to_document
from graphtopy.graphs.validation import ensure_valid_morphism
from graphtopy.zeta.homs import walk_to_morphism

from ..io import emit, load_morphism, positive_int
from ..utils import console, print_verdict

_walk_adapter = TypeAdapter(list[str])


class ExtensionResult(BaseModel):
    cycle_length: int
    depth: int
    nodes: int
    arcs: int
    unicyclic: bool
    locally_covering: bool
    forest: dict[str, list[str]]
    graph: dict


def setup_parser(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("file", help="Covering morphism JSON (Y -> X)")
    parser.add_argument(
        "--cycle",
        required=True,
        help="JSON list of half-arcs of Y forming a closed walk",
    )
    parser.add_argument(
        "--depth", type=positive_int, default=None, help="Forest depth (default 1)"
    )


def execute(args: argparse.Namespace, limits: CountingLimits) -> int:
    f = Covering.verify(load_morphism(args.file))
    try:
        walk = _walk_adapter.validate_python(load_json(args.cycle, "--cycle"))
    except ValidationError as e:
        raise schema_error(e, "--cycle") from e
    h = ensure_valid_morphism(
        walk_to_morphism(undirected_cycle(len(walk)), f.total, tuple(walk))
    )
    depth = args.depth or limits.FOREST_DEPTH
    obj = extend_cycle_to_rxp(f, h, depth).obj
    result = ExtensionResult(
        cycle_length=obj.cycle_length,
        depth=depth,
        nodes=len(obj.graph.nodes),
        arcs=len(obj.graph.arcs),
        unicyclic=obj.is_unicyclic(),
        locally_covering=obj.is_locally_covering(),
        forest=obj.forest,
        graph=to_document(obj.graph).model_dump(),
    )

    def render() -> None:
        console.print(
            f"R_X^{obj.cycle_length} object: {result.nodes} nodes, {result.arcs} arcs",
            markup=False,
        )
        print_verdict("unicyclic", result.unicyclic)
        print_verdict("covering above the leaves", result.locally_covering)
        for root, children in obj.forest.items():
            console.print(f"{root}: {' '.join(children) or '-'}", markup=False)

    emit(args, result, render)
    return 0 if result.unicyclic and result.locally_covering else 1
