"""
ihara 명령 - 무향 그래프의 Ihara 급수, det(I - tB), Bass 항등식 검사.
"""

from __future__ import annotations

import argparse

from pydantic import BaseModel

from graphtopy.core.config import CountingLimits
from graphtopy.zeta.series import SeriesDocument
from graphtopy.zeta.zeta import bass_check, ihara_series

from ..io import emit, load_undirected, positive_int
from ..utils import console, print_verdict


class IharaResult(BaseModel):
    order: int
    series: SeriesDocument
    reciprocal: list[int] | None
    bass_holds: bool | None
    bass_exponent: int | None


def setup_parser(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("file", help="Undirected graph JSON")
    parser.add_argument(
        "--terms", type=positive_int, default=None, help="Series order P (default 8)"
    )


def execute(args: argparse.Namespace, limits: CountingLimits) -> int:
    x = load_undirected(args.file)
    order = args.terms or limits.TRUNCATION_ORDER
    series = ihara_series(x, order)
    # det(I - tB) and the Bass identity are stated for loopless graphs
    check = None if x.has_loops() else bass_check(x)
    result = IharaResult(
        order=order,
        series=series.to_document(),
        reciprocal=list(check.lhs.coeffs) if check else None,
        bass_holds=check.holds if check else None,
        bass_exponent=check.exponent if check else None,
    )

    def render() -> None:
        console.print(f"Z(t) = {series}", markup=False)
        if check is None:
            console.print("graph has loops: no operator determinant")
            return
        console.print(f"det(I - tB) = {check.lhs}", markup=False)
        print_verdict("Bass identity", check.holds)

    emit(args, result, render)
    return 0 if check is None or check.holds else 1
