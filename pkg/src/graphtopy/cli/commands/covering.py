"""
covering 명령 - 사상이 covering 인지 검사.
"""

from __future__ import annotations

import argparse

from pydantic import BaseModel

from graphtopy.core.config import CountingLimits
from graphtopy.coverings.covering import (
    Covering,
    covering_degree,
    covering_diagnostics,
)
from graphtopy.graphs.components import is_connected

from ..io import diagnostics_payload, emit, load_morphism
from ..utils import console, create_table, print_verdict


class CoveringResult(BaseModel):
    covering: bool
    degree: int | None = None
    diagnostics: list[dict]


def setup_parser(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("file", help="Morphism JSON (total -> base)")


def execute(args: argparse.Namespace, limits: CountingLimits) -> int:
    f = load_morphism(args.file)
    found = covering_diagnostics(f)
    degree = None
    if not found and is_connected(f.codomain):
        degree = covering_degree(Covering(f))
    result = CoveringResult(
        covering=not found, degree=degree, diagnostics=diagnostics_payload(found)
    )

    def render() -> None:
        print_verdict("covering", result.covering)
        if degree is not None:
            console.print(f"degree: {degree}")
        if found:
            table = create_table("Star failures", ["Node", "Message"])
            for d in found:
                table.add_row(str(d.subject), d.message)
            console.print(table)

    emit(args, result, render)
    return 0 if result.covering else 1
