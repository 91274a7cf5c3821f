"""
validate 명령 - 그래프 또는 사상 JSON 의 구조 검사.
"""

from __future__ import annotations

import argparse

from pydantic import BaseModel

from graphtopy.core.config import CountingLimits
from graphtopy.graphs.validation import validate, validate_morphism

from ..io import diagnostics_payload, emit, load_graph, load_morphism
from ..utils import console, create_table, print_verdict


class ValidationResult(BaseModel):
    kind: str
    valid: bool
    diagnostics: list[dict]


def setup_parser(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("file", help="Graph JSON (or morphism JSON with --morphism)")
    parser.add_argument(
        "--morphism", action="store_true", help="Input is a morphism document"
    )


def execute(args: argparse.Namespace, limits: CountingLimits) -> int:
    if args.morphism:
        found = validate_morphism(load_morphism(args.file, strict=False))
    else:
        found = validate(load_graph(args.file, strict=False))
    result = ValidationResult(
        kind="morphism" if args.morphism else "graph",
        valid=not found,
        diagnostics=diagnostics_payload(found),
    )

    def render() -> None:
        print_verdict("valid", result.valid)
        if found:
            table = create_table("Diagnostics", ["Code", "Subject", "Message"])
            for d in found:
                table.add_row(d.code, str(d.subject), d.message)
            console.print(table)

    emit(args, result, render)
    return 0 if result.valid else 1
