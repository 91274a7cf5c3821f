"""
cofib 명령 - 절단된 cofibrant 치환 ⊕ m_ℓ·c_ℓ 의 원시 순환 중복도.
"""

from __future__ import annotations

import argparse

from pydantic import BaseModel

from graphtopy.core.config import CountingLimits
from graphtopy.zeta.replacement import primitive_multiplicities

from ..io import emit, load_directed, positive_int
from ..utils import console, create_table


class ReplacementResult(BaseModel):
    bound: int
    multiplicities: dict[int, int]
    counts: dict[int, int]


def setup_parser(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("file", help="Directed graph JSON")
    parser.add_argument(
        "--max",
        type=positive_int,
        default=None,
        dest="bound",
        help="Cycle length bound L (default 8)",
    )


def execute(args: argparse.Namespace, limits: CountingLimits) -> int:
    bound = args.bound or limits.CYCLE_BOUND
    found = primitive_multiplicities(load_directed(args.file), bound)
    result = ReplacementResult(
        bound=bound, multiplicities=found.multiplicities, counts=found.counts
    )

    def render() -> None:
        table = create_table(f"Primitive cycles up to {bound}", ["ℓ", "m_ℓ", "n_ℓ"])
        for length in range(1, bound + 1):
            table.add_row(
                str(length), str(found[length]), str(found.counts[length])
            )
        console.print(table)

    emit(args, result, render)
    return 0
