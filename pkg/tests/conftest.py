"""
Test configuration and fixtures for graphtopy package tests.

Random corpora are drawn from fixed seeds so every run sees the same graphs.
"""

import json
import os
import random

import pytest

os.environ["GRAPHTOPY_ENVIRONMENT"] = "development"

from graphtopy.graphs.models import DirectedGraph, UndirectedGraph  # noqa: E402
from graphtopy.gsets.action import GSetAction  # noqa: E402

SEED = 20240611


def random_directed(rng: random.Random) -> DirectedGraph:
    n = rng.randint(1, 6)
    nodes = [str(k) for k in range(n)]
    arcs = [
        (f"e{k}", rng.choice(nodes), rng.choice(nodes))
        for k in range(rng.randint(0, 10))
    ]
    return DirectedGraph.build(nodes, arcs)


def random_loopless_undirected(rng: random.Random) -> UndirectedGraph:
    n = rng.randint(2, 6)
    nodes = [str(k) for k in range(n)]
    pairs = []
    for _ in range(rng.randint(1, 8)):
        u, v = rng.sample(nodes, 2)
        pairs.append((u, v))
    return UndirectedGraph.from_edges(nodes, pairs)


def random_involution(rng: random.Random, points: list[str]) -> dict[str, str]:
    """Pairs up a random subset of points; the rest are fixed."""
    shuffled = points[:]
    rng.shuffle(shuffled)
    table = {x: x for x in points}
    k = rng.randint(0, len(points) // 2)
    for i in range(k):
        a, b = shuffled[2 * i], shuffled[2 * i + 1]
        table[a], table[b] = b, a
    return table


def random_involutive_gset(rng: random.Random, n: int) -> GSetAction:
    points = [f"p{k}" for k in range(rng.randint(1, 8))]
    return GSetAction.from_maps(
        points,
        {f"a{i}": random_involution(rng, points) for i in range(n)},
        kind="involutive",
    )


@pytest.fixture(scope="session")
def directed_corpus() -> list[DirectedGraph]:
    """100 random directed graphs, at most 6 nodes and 10 arcs."""
    rng = random.Random(SEED)
    return [random_directed(rng) for _ in range(100)]


@pytest.fixture(scope="session")
def undirected_corpus() -> list[UndirectedGraph]:
    """100 random loopless undirected graphs, at most 6 nodes."""
    rng = random.Random(SEED + 1)
    return [random_loopless_undirected(rng) for _ in range(100)]


@pytest.fixture(scope="session")
def colored_corpus() -> list[GSetAction]:
    """20 random G_n-sets (n in {2, 3}) on at most 8 points."""
    rng = random.Random(SEED + 2)
    return [random_involutive_gset(rng, rng.choice([2, 3])) for _ in range(20)]


@pytest.fixture
def write_json(tmp_path):
    """Write a JSON-serializable payload (or a raw string) and return its path."""

    def _write(name: str, payload) -> str:
        path = tmp_path / name
        text = payload if isinstance(payload, str) else json.dumps(payload)
        path.write_text(text, encoding="utf-8")
        return str(path)

    return _write
