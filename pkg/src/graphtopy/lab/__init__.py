"""Executable counting arguments, packaged as reports."""

from .demos import (
    DEMOS,
    demo_dessins_d0_d1,
    demo_prop_4_8,
    demo_prop_4_8_examples,
    demo_prop_5_4,
    demo_theorem_4_9,
    prop_4_8_examples,
)
from .reports import COMPUTATIONAL_SCOPE, Claim, DemoReport

__all__ = [
    "Claim",
    "DemoReport",
    "COMPUTATIONAL_SCOPE",
    "DEMOS",
    "demo_prop_4_8",
    "demo_prop_4_8_examples",
    "prop_4_8_examples",
    "demo_theorem_4_9",
    "demo_dessins_d0_d1",
    "demo_prop_5_4",
]
