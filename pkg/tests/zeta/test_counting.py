"""
Tests for trace formulas against explicit enumeration.
"""

import pytest

from graphtopy.core.errors import InvalidParameterError, LoopsPresentError
from graphtopy.graphs.builders import (
    bouquet,
    complete_graph,
    directed_bouquet,
    directed_cycle,
    undirected_cycle,
)
from graphtopy.zeta.counting import (
    adjacency_matrix,
    closed_walk_count,
    cycle_count_vector,
    hashimoto_count,
    nb_count_vector,
)
from graphtopy.zeta.homs import closed_walks, count_homs


def test_closed_walks_of_a_cycle():
    """Test n_p(c_3) is 3 when 3 | p and 0 otherwise."""
    c3 = directed_cycle(3)

    assert [closed_walk_count(c3, p) for p in range(1, 7)] == [0, 0, 3, 0, 0, 3]


def test_bouquet_counts():
    """Test n_p(B_2) = 2^p."""
    assert cycle_count_vector(directed_bouquet(2), 4) == {1: 2, 2: 4, 3: 8, 4: 16}


def test_adjacency_counts_parallel_half_arcs():
    """Test A of the digon has 2 on the off diagonal."""
    assert adjacency_matrix(undirected_cycle(2)).tolist() == [[0, 2], [2, 0]]


def test_k4_nonbacktracking_triangles():
    """Test c_3(K_4) = 24: four triangles, three starts, two directions."""
    assert hashimoto_count(complete_graph(4), 3) == 24


def test_digon_nonbacktracking():
    """Test c^2_U has four non-backtracking closed 2-walks."""
    assert nb_count_vector(undirected_cycle(2), 2) == {1: 0, 2: 4}


def test_loops_use_enumeration():
    """Test degenerate loops backtrack on themselves."""
    assert nb_count_vector(bouquet(2), 4) == {1: 0, 2: 2, 3: 0, 4: 2}


def test_hashimoto_refuses_loops():
    """Test the operator is undefined with loops."""
    with pytest.raises(LoopsPresentError):
        hashimoto_count(bouquet(1), 1)


def test_p_must_be_positive():
    """Test p = 0 is rejected."""
    with pytest.raises(InvalidParameterError):
        closed_walk_count(directed_cycle(2), 0)


def test_trace_matches_enumeration_directed(directed_corpus):
    """Test tr(A^p) = |Hom(c_p, X)| on random directed graphs."""
    for g in directed_corpus:
        for p in range(1, 5):
            assert closed_walk_count(g, p) == count_homs(directed_cycle(p), g), g


def test_trace_matches_enumeration_undirected(undirected_corpus):
    """Test tr(A^p) = |Hom(c^p_U, X)| and tr(B^p) = nb walk count."""
    for g in undirected_corpus:
        for p in range(2, 5):
            assert closed_walk_count(g, p) == count_homs(undirected_cycle(p), g), g
            assert hashimoto_count(g, p) == len(closed_walks(g, p, True)), g
