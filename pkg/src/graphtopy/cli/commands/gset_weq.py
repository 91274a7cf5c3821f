"""
gset-weq 명령 - Cayley 그래프를 통한 G-set 약동치 판정.
"""

from __future__ import annotations

import argparse

from pydantic import BaseModel

from graphtopy.core.config import CountingLimits
from graphtopy.graphs.isomorphism import is_isomorphic
from graphtopy.gsets.cayley import cayley_directed
from graphtopy.gsets.homotopy import weak_equiv_gsets
from graphtopy.zeta.zeta import zeta_rational

from ..io import emit, load_gset
from ..utils import console, print_verdict


class GSetWeakEquivalenceResult(BaseModel):
    weakly_equivalent: bool
    isomorphic: bool
    reciprocals: dict[str, list[int]]


def setup_parser(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("left", help="G-set JSON")
    parser.add_argument("right", help="G-set JSON on the same generators")


def execute(args: argparse.Namespace, limits: CountingLimits) -> int:
    x, y = load_gset(args.left), load_gset(args.right)
    weak = weak_equiv_gsets(x, y)
    gx, gy = cayley_directed(x), cayley_directed(y)
    result = GSetWeakEquivalenceResult(
        weakly_equivalent=weak,
        isomorphic=is_isomorphic(gx, gy) is not None,
        reciprocals={
            "left": list(zeta_rational(gx).coeffs),
            "right": list(zeta_rational(gy).coeffs),
        },
    )

    def render() -> None:
        print_verdict("weakly equivalent", result.weakly_equivalent)
        print_verdict("Cayley graphs isomorphic", result.isomorphic)
        for side, coeffs in result.reciprocals.items():
            console.print(f"{side}: {coeffs}", markup=False)

    emit(args, result, render)
    return 0 if weak else 1
