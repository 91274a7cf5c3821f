"""
Tests for n-colorings as coverings of B_n and D_n.
"""

import pytest

from graphtopy.core.errors import InvalidParameterError
from graphtopy.coverings.coloring import (
    coloring_of,
    edge_coloring,
    find_bipartite_coloring,
    find_n_coloring,
)
from graphtopy.coverings.covering import covering_degree
from graphtopy.graphs.builders import (
    bouquet,
    complete_graph,
    eight,
    path,
    petersen,
    undirected_cycle,
)


def test_petersen_has_no_3_coloring():
    """Test the Petersen graph does not cover B_3."""
    assert find_n_coloring(petersen(), 3) is None


def test_k4_colors_properly():
    """Test each node of K_4 sees the three colors once."""
    c = find_n_coloring(complete_graph(4), 3)
    assert c is not None

    colors = coloring_of(c)
    g = c.total
    for u in g.nodes:
        assert sorted(colors[h] for h in g.out_edges[u]) == [0, 1, 2]
    assert covering_degree(c) == 4


def test_odd_cycle_has_no_2_coloring():
    """Test C_3 is 2-regular but not 2-colorable."""
    assert find_n_coloring(complete_graph(3), 2) is None


def test_irregular_graph():
    """Test a path is not regular."""
    assert edge_coloring(path(3), 1) is None


def test_bouquet_covers_itself():
    """Test degenerate loops are colorable."""
    c = find_n_coloring(bouquet(2), 2)

    assert c is not None
    assert coloring_of(c) == {"a0": 0, "a1": 1}


def test_non_degenerate_loop_is_refused():
    """Test the figure eight is 4-regular but cannot cover B_4."""
    assert find_n_coloring(eight(), 4) is None


def test_n_must_be_positive():
    """Test n = 0 is rejected."""
    with pytest.raises(InvalidParameterError):
        edge_coloring(undirected_cycle(4), 0)


def test_bipartite_coloring():
    """Test C_4 covers D_2 with the bipartition sent to the two nodes."""
    c = find_bipartite_coloring(undirected_cycle(4), 2)

    assert c is not None
    assert covering_degree(c) == 2
    assert c.morphism.f0["0"] == "0"
    assert c.morphism.f0["1"] == "1"
    assert find_bipartite_coloring(complete_graph(3), 2) is None
