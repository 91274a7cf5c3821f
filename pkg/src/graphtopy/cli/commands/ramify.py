"""
ramify 명령 - Galois 복합체의 분기 프로파일.
"""

from __future__ import annotations

import argparse

from pydantic import BaseModel

from graphtopy.core.config import CountingLimits
from graphtopy.gsets.galois import ramification_profile

from ..io import emit, load_galois_complex, positive_int
from ..utils import console, create_table


class RamificationRow(BaseModel):
    cycle: list[str]
    length: int
    colors: list[str]
    m: int
    walks: int
    degree: int | None
    vertex_ambiguous: bool


class RamificationResult(BaseModel):
    bound: int
    dimension: int
    entries: list[RamificationRow]


def setup_parser(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("file", help="Galoisian complex JSON")
    parser.add_argument(
        "--max",
        type=positive_int,
        default=None,
        dest="bound",
        help="Half-length bound P: cycles of length 2p <= 2P (default 8)",
    )


def execute(args: argparse.Namespace, limits: CountingLimits) -> int:
    g = load_galois_complex(args.file)
    bound = args.bound or limits.TRUNCATION_ORDER
    entries = ramification_profile(g, bound)
    result = RamificationResult(
        bound=bound,
        dimension=g.dimension,
        entries=[
            RamificationRow(
                cycle=list(e.cycle),
                length=e.length,
                colors=list(e.colors),
                m=e.m,
                walks=e.walks,
                degree=e.degree,
                vertex_ambiguous=e.vertex_ambiguous,
            )
            for e in entries
        ],
    )

    def render() -> None:
        table = create_table(
            f"Ramification up to length {2 * bound}",
            ["Length", "Colors", "Degree", "Flag", "Cycle"],
        )
        for row in result.entries:
            table.add_row(
                str(row.length),
                ",".join(row.colors),
                "-" if row.degree is None else str(row.degree),
                "vertex" if row.vertex_ambiguous else "",
                " ".join(row.cycle),
            )
        console.print(table)

    emit(args, result, render)
    return 0
