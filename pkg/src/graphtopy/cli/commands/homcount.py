"""
homcount 명령 - |Hom(c_p, X)| 를 열거와 대각합으로 비교.
"""

from __future__ import annotations

import argparse

from pydantic import BaseModel

from graphtopy.core.config import CountingLimits
from graphtopy.graphs.builders import directed_cycle, undirected_cycle
from graphtopy.graphs.models import DirectedGraph
from graphtopy.zeta.counting import closed_walk_count, hashimoto_count
from graphtopy.zeta.homs import closed_walks, count_homs

from ..io import emit, load_graph, positive_int
from ..utils import console, create_table


class HomCountResult(BaseModel):
    p: int
    flavor: str
    homs: int
    trace: int
    nonbacktracking: int | None = None
    hashimoto_trace: int | None = None


def setup_parser(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("file", help="Graph JSON")
    parser.add_argument(
        "--cycle", type=positive_int, required=True, help="Cycle length p"
    )


def execute(args: argparse.Namespace, limits: CountingLimits) -> int:
    x = load_graph(args.file)
    p = args.cycle
    if isinstance(x, DirectedGraph):
        result = HomCountResult(
            p=p,
            flavor=x.flavor,
            homs=count_homs(directed_cycle(p), x),
            trace=closed_walk_count(x, p),
        )
    else:
        result = HomCountResult(
            p=p,
            flavor=x.flavor,
            homs=count_homs(undirected_cycle(p), x),
            trace=closed_walk_count(x, p),
            nonbacktracking=len(closed_walks(x, p, nonbacktracking=True)),
            hashimoto_trace=None if x.has_loops() else hashimoto_count(x, p),
        )

    def render() -> None:
        table = create_table(f"Cycles of length {p}", ["Count", "Value"])
        for name, value in result.model_dump(exclude={"p", "flavor"}).items():
            if value is not None:
                table.add_row(name, str(value))
        console.print(table)

    emit(args, result, render)
    agree = result.homs == result.trace and (
        result.hashimoto_trace is None
        or result.hashimoto_trace == result.nonbacktracking
    )
    return 0 if agree else 1
