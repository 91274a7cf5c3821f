"""
Tests for graph and morphism JSON documents.
"""

import json

import pytest

from graphtopy.core.errors import InputFormatError
from graphtopy.graphs.builders import bouquet, directed_cycle, elementary_folding
from graphtopy.graphs.models import DirectedGraph
from graphtopy.graphs.serialization import (
    graph_to_json,
    morphism_to_json,
    parse_graph,
    parse_morphism,
)
from graphtopy.graphs.validation import validate_morphism


def test_directed_document():
    """Test the directed document layout and parsing it back."""
    text = graph_to_json(directed_cycle(2))

    assert json.loads(text) == {
        "flavor": "directed",
        "nodes": ["0", "1"],
        "arcs": [
            {"id": "a0", "src": "0", "tgt": "1"},
            {"id": "a1", "src": "1", "tgt": "0"},
        ],
    }
    assert parse_graph(text) == directed_cycle(2)


def test_undirected_document_keeps_degenerate_loops():
    """Test degenerate loops survive as inv(h) = h."""
    g = parse_graph(graph_to_json(bouquet(2)))

    assert g == bouquet(2)
    assert g.is_degenerate("a0")


def test_output_is_deterministic():
    """Test insertion order does not change the document."""
    one = DirectedGraph.build(["1", "0"], [("b", "1", "0"), ("a", "0", "1")])
    two = DirectedGraph.build(["0", "1"], [("a", "0", "1"), ("b", "1", "0")])

    assert graph_to_json(one) == graph_to_json(two)


def test_morphism_document():
    """Test morphisms carry total, base and the two maps."""
    f = parse_morphism(morphism_to_json(elementary_folding()))

    assert dict(f.f1) == dict(elementary_folding().f1)
    assert validate_morphism(f) == []


def test_malformed_json_has_position():
    """Test syntax errors report line and column."""
    with pytest.raises(InputFormatError) as exc:
        parse_graph('{\n  "flavor": }', source="g.json")

    assert exc.value.code == "GT-010"
    assert exc.value.subject == "g.json"
    assert exc.value.line == 2


@pytest.mark.parametrize(
    "payload, fragment",
    [
        ({"flavor": "directed", "nodes": ["0"], "arcs": [{"id": "a"}]}, "src"),
        ({"flavor": "mixed", "nodes": []}, "flavor"),
        ({"flavor": "directed", "nodes": [], "extra": 1}, "extra"),
    ],
)
def test_schema_errors(payload, fragment):
    """Test schema violations name the offending field."""
    with pytest.raises(InputFormatError, match=fragment):
        parse_graph(json.dumps(payload))


def test_duplicate_ids():
    """Test duplicate node ids are rejected."""
    payload = {"flavor": "directed", "nodes": ["0", "0"], "arcs": []}

    with pytest.raises(InputFormatError, match="Duplicate node id: 0"):
        parse_graph(json.dumps(payload))
