"""
zeta 명령 - 유향 그래프의 zeta 급수와 역다항식 det(I - tA).
"""

from __future__ import annotations

import argparse

from pydantic import BaseModel

from graphtopy.core.config import CountingLimits
from graphtopy.zeta.series import SeriesDocument
from graphtopy.zeta.zeta import zeta_rational, zeta_series

from ..io import emit, load_directed, positive_int
from ..utils import console, print_verdict


class ZetaResult(BaseModel):
    order: int
    series: SeriesDocument
    reciprocal: list[int]
    consistent: bool


def setup_parser(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("file", help="Directed graph JSON")
    parser.add_argument(
        "--terms", type=positive_int, default=None, help="Series order P (default 8)"
    )


def execute(args: argparse.Namespace, limits: CountingLimits) -> int:
    x = load_directed(args.file)
    order = args.terms or limits.TRUNCATION_ORDER
    series = zeta_series(x, order)
    reciprocal = zeta_rational(x)
    result = ZetaResult(
        order=order,
        series=series.to_document(),
        reciprocal=list(reciprocal.coeffs),
        consistent=(series * reciprocal.to_series(order)).coeffs
        == (1,) + (0,) * order,
    )

    def render() -> None:
        console.print(f"Z(t) = {series}", markup=False)
        console.print(f"1/Z(t) = {reciprocal}", markup=False)
        print_verdict("series times reciprocal is 1", result.consistent)

    emit(args, result, render)
    return 0
