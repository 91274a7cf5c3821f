"""
weq 명령 - 두 그래프의 약동치 판정.

유향: Z_X = Z_Y (역다항식 비교). 무향: c_p 가 P 까지 일치.
"""

from __future__ import annotations

import argparse

from pydantic import BaseModel

from graphtopy.core.config import CountingLimits
from graphtopy.core.errors import FlavorMismatchError
from graphtopy.graphs.models import DirectedGraph, UndirectedGraph
from graphtopy.zeta.counting import nb_count_vector
from graphtopy.zeta.zeta import weak_equiv_directed, zeta_rational

from ..io import emit, load_graph, positive_int
from ..utils import console, print_verdict


class WeakEquivalenceResult(BaseModel):
    flavor: str
    weakly_equivalent: bool
    bounded: bool
    evidence: dict[str, list[int]]


def setup_parser(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("left", help="Graph JSON")
    parser.add_argument("right", help="Graph JSON of the same flavor")
    parser.add_argument(
        "--terms",
        type=positive_int,
        default=None,
        help="Cycle bound P for undirected graphs (default 8)",
    )


def execute(args: argparse.Namespace, limits: CountingLimits) -> int:
    x, y = load_graph(args.left), load_graph(args.right)
    if isinstance(x, DirectedGraph) and isinstance(y, DirectedGraph):
        result = WeakEquivalenceResult(
            flavor="directed",
            weakly_equivalent=weak_equiv_directed(x, y),
            bounded=False,
            evidence={
                "left": list(zeta_rational(x).coeffs),
                "right": list(zeta_rational(y).coeffs),
            },
        )
    elif isinstance(x, UndirectedGraph) and isinstance(y, UndirectedGraph):
        bound = args.terms or limits.TRUNCATION_ORDER
        left, right = nb_count_vector(x, bound), nb_count_vector(y, bound)
        result = WeakEquivalenceResult(
            flavor="undirected",
            weakly_equivalent=left == right,
            bounded=True,
            evidence={"left": list(left.values()), "right": list(right.values())},
        )
    else:
        raise FlavorMismatchError()

    def render() -> None:
        print_verdict("weakly equivalent", result.weakly_equivalent)
        for side, values in result.evidence.items():
            console.print(f"{side}: {values}", markup=False)

    emit(args, result, render)
    return 0 if result.weakly_equivalent else 1
