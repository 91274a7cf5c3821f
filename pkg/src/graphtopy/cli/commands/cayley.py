"""
cayley 명령 - G-set 의 Cayley 그래프 생성.
"""

from __future__ import annotations

import argparse

from graphtopy.core.config import CountingLimits
from graphtopy.graphs.serialization import to_document
from graphtopy.gsets.cayley import cayley_directed, cayley_undirected

from ..io import emit, load_gset
from ..utils import console, create_table


def setup_parser(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("file", help="G-set JSON")
    parser.add_argument(
        "--undirected",
        action="store_true",
        help="Undirected Cayley graph of an involutive action",
    )


def execute(args: argparse.Namespace, limits: CountingLimits) -> int:
    x = load_gset(args.file)
    graph = cayley_undirected(x) if args.undirected else cayley_directed(x)

    def render() -> None:
        table = create_table(repr(graph), ["Edge", "Source", "Target"])
        for e in graph.sorted_edges:
            table.add_row(e, graph.src[e], graph.tgt[e])
        console.print(table)

    emit(args, to_document(graph), render)
    return 0
