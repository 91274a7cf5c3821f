"""
Tests for dessins, their passports and bipartite maps.
"""

import pytest

from graphtopy.core.errors import InvalidActionError
from graphtopy.graphs.builders import path, undirected_arc
from graphtopy.graphs.isomorphism import is_isomorphic
from graphtopy.graphs.validation import validate
from graphtopy.gsets.action import GSetAction
from graphtopy.gsets.dessins import Dessin, d0, d1, dessin_bipartite, dessin_passport


@pytest.mark.parametrize(
    "dessin, expected",
    [
        (d0(), [[1], [1], [1]]),
        (d1(), [[1, 1], [2], [2]]),
        (
            Dessin.from_maps(
                ["1", "2", "3"], {"1": "2", "2": "1"}, {"2": "3", "3": "2"}
            ),
            [[2, 1], [2, 1], [3]],
        ),
    ],
)
def test_passport(dessin, expected):
    assert dessin_passport(dessin).as_lists() == expected


def test_sizes():
    assert (d0().size, d1().size) == (1, 2)


def test_d0_is_one_edge():
    g = dessin_bipartite(d0())

    assert is_isomorphic(g, undirected_arc()) is not None


def test_d1_is_a_path():
    """Test D_1 has two white nodes and one black node of degree 2."""
    g = dessin_bipartite(d1())

    assert validate(g) == []
    assert is_isomorphic(g, path(3)) is not None
    assert sorted(g.nodes) == ["b0", "w0", "w1"]


def test_star_dessin():
    """Test a 3-cycle over 0 gives one white node and three black leaves."""
    d = Dessin.from_maps(["1", "2", "3"], {"1": "2", "2": "3", "3": "1"}, {})

    g = dessin_bipartite(d)

    assert sorted(g.nodes) == ["b0", "b1", "b2", "w0"]
    assert len(g.out_edges["w0"]) == 3


def test_generators_must_be_s0_s1():
    with pytest.raises(InvalidActionError):
        Dessin(GSetAction.trivial(["a", "b"]))


def test_involutive_action_refused():
    with pytest.raises(InvalidActionError):
        Dessin(GSetAction.trivial(["s0", "s1"], kind="involutive"))
