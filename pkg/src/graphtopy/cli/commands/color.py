"""
color 명령 - n-색칠 (B_n 또는 D_n 으로의 covering) 탐색.
"""

from __future__ import annotations

import argparse

from pydantic import BaseModel

from graphtopy.core.config import CountingLimits
from graphtopy.coverings.coloring import (
    coloring_of,
    find_bipartite_coloring,
    find_n_coloring,
)

from ..io import emit, load_undirected, positive_int
from ..utils import console, create_table, print_verdict


class ColoringResult(BaseModel):
    n: int
    bipartite: bool
    colorable: bool
    coloring: dict[str, int] | None = None


def setup_parser(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("file", help="Undirected graph JSON")
    parser.add_argument(
        "--n", type=positive_int, required=True, help="Number of colors"
    )
    parser.add_argument(
        "--bipartite",
        action="store_true",
        help="Search a covering to D_n instead of B_n",
    )


def execute(args: argparse.Namespace, limits: CountingLimits) -> int:
    x = load_undirected(args.file)
    search = find_bipartite_coloring if args.bipartite else find_n_coloring
    found = search(x, args.n)
    coloring = None
    if found is not None:
        colors = coloring_of(found)
        coloring = {h: colors[h] for h in x.arcs}
    result = ColoringResult(
        n=args.n,
        bipartite=args.bipartite,
        colorable=found is not None,
        coloring=coloring,
    )

    def render() -> None:
        print_verdict("colorable", result.colorable)
        if coloring:
            table = create_table(f"{args.n}-coloring", ["Arc", "Ends", "Color"])
            for h, c in coloring.items():
                table.add_row(h, f"{x.src[h]} - {x.tgt[h]}", str(c))
            console.print(table)

    emit(args, result, render)
    return 0 if result.colorable else 1
