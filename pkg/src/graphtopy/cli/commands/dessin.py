"""
dessin 명령 - 데생의 passport 또는 이분 그래프.
"""

from __future__ import annotations

import argparse

from pydantic import BaseModel

from graphtopy.core.config import CountingLimits
from graphtopy.graphs.components import is_bipartite
from graphtopy.graphs.serialization import to_document
from graphtopy.gsets.dessins import dessin_bipartite, dessin_passport

from ..io import emit, load_dessin
from ..utils import console, create_table


class PassportResult(BaseModel):
    size: int
    zero: list[int]
    one: list[int]
    infinity: list[int]


def setup_parser(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("view", choices=["passport", "graph"], help="What to print")
    parser.add_argument("file", help="Dessin JSON (an F_2-set on s0, s1)")


def execute(args: argparse.Namespace, limits: CountingLimits) -> int:
    d = load_dessin(args.file)
    if args.view == "passport":
        passport = dessin_passport(d)
        result = PassportResult(
            size=d.size,
            zero=list(passport.zero),
            one=list(passport.one),
            infinity=list(passport.infinity),
        )

        def render() -> None:
            table = create_table("Passport", ["Over", "Cycle type"])
            rows = (("0", result.zero), ("1", result.one), ("∞", result.infinity))
            for over, part in rows:
                table.add_row(over, str(part))
            console.print(table)

        emit(args, result, render)
        return 0

    graph = dessin_bipartite(d)

    def render_graph() -> None:
        table = create_table(repr(graph), ["Edge", "White", "Black"])
        for e in d.action.sorted_carrier:
            table.add_row(e, graph.src[f"{e}+"], graph.tgt[f"{e}+"])
        console.print(table)

    emit(args, to_document(graph), render_graph)
    return 0 if is_bipartite(graph) else 1
