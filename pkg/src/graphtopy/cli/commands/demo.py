"""
demo 명령 - 계산 가능한 반례와 예제 재현.
"""

from __future__ import annotations

import argparse

from graphtopy.core.config import CountingLimits
from graphtopy.lab.demos import DEMOS

from ..io import emit
from ..utils import console, create_table, print_verdict


def setup_parser(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("name", choices=sorted(DEMOS), help="Demo to run")


def execute(args: argparse.Namespace, limits: CountingLimits) -> int:
    report = DEMOS[args.name]()

    def render() -> None:
        table = create_table(report.demo, ["Claim", "Holds", "Expected", "Evidence"])
        for c in report.claims:
            expected = "-" if c.expected is None else str(c.expected).lower()
            evidence = ", ".join(f"{k}={v}" for k, v in c.evidence.items())
            table.add_row(c.claim, str(c.holds).lower(), expected, evidence)
        console.print(table)
        console.print(report.note, markup=False)
        print_verdict("passed", report.passed)

    emit(args, report, render)
    return 0 if report.passed else 1
