"""
Tests for sums, products, pushouts and pullbacks of graphs.
"""

import pytest

from graphtopy.core.errors import FlavorMismatchError
from graphtopy.graphs.builders import (
    arc,
    cherry_to_digon,
    digon_to_arc,
    directed_bouquet,
    directed_cycle,
    eight,
    elementary_folding,
    undirected_arc,
    undirected_cycle,
    undirected_dot,
)
from graphtopy.graphs.isomorphism import is_isomorphic
from graphtopy.graphs.limits import (
    empty,
    graph_sum,
    pair_id,
    product,
    pullback,
    pushout,
    terminal,
)
from graphtopy.graphs.models import GraphMorphism, compose
from graphtopy.graphs.validation import validate, validate_morphism
from graphtopy.zeta.counting import closed_walk_count
from graphtopy.zeta.homs import count_homs, enumerate_homs


class TestSum:
    """Test coproducts."""

    def test_sizes_and_ids(self):
        s, left, right = graph_sum(directed_cycle(3), directed_cycle(2))

        assert len(s.nodes) == 5
        assert len(s.edges) == 5
        assert left.f1["a0"] == "0:a0"
        assert right.f0["1"] == "1:1"
        assert validate_morphism(left) == validate_morphism(right) == []

    def test_empty_is_neutral(self):
        c3 = directed_cycle(3)

        assert is_isomorphic(graph_sum(c3, empty()).graph, c3) is not None

    def test_flavors_must_agree(self):
        with pytest.raises(FlavorMismatchError):
            graph_sum(arc(), undirected_arc())

    def test_closed_walks_add(self, directed_corpus):
        """Test n_p(X + Y) = n_p(X) + n_p(Y)."""
        for x, y in zip(directed_corpus[:20], directed_corpus[20:40]):
            s = graph_sum(x, y).graph
            for p in range(1, 5):
                expected = closed_walk_count(x, p) + closed_walk_count(y, p)
                assert closed_walk_count(s, p) == expected

    def test_copairing(self):
        """Test maps out of X + Y are pairs of maps out of X and Y."""
        x, y, z = directed_cycle(2), arc(), directed_bouquet(2)
        s, left, right = graph_sum(x, y)

        assert count_homs(s, z) == count_homs(x, z) * count_homs(y, z)

        f, g = enumerate_homs(x, z)[1], enumerate_homs(y, z)[1]
        f0 = {left.f0[n]: f.f0[n] for n in x.nodes}
        f0 |= {right.f0[n]: g.f0[n] for n in y.nodes}
        f1 = {left.f1[e]: f.f1[e] for e in x.edges}
        f1 |= {right.f1[e]: g.f1[e] for e in y.edges}
        copair = GraphMorphism(domain=s, codomain=z, f0=f0, f1=f1)

        assert validate_morphism(copair) == []
        assert compose(copair, left).key == f.key
        assert compose(copair, right).key == g.key


class TestProduct:
    """Test products."""

    def test_cycles_of_coprime_length(self):
        g, left, right = product(directed_cycle(2), directed_cycle(3))

        assert is_isomorphic(g, directed_cycle(6)) is not None
        assert validate_morphism(left) == validate_morphism(right) == []

    def test_arc_squared(self):
        """Test A × A has four nodes and a single arc."""
        g = product(arc(), arc()).graph

        assert len(g.nodes) == 4
        assert len(g.edges) == 1

    def test_pairing(self):
        """Test maps into X × Y are pairs of maps into X and Y."""
        x, y, z = directed_bouquet(2), directed_cycle(2), directed_cycle(4)
        g, left, right = product(x, y)

        assert count_homs(z, g) == count_homs(z, x) * count_homs(z, y)

        f, h = enumerate_homs(z, x)[3], enumerate_homs(z, y)[1]
        pairing = GraphMorphism(
            domain=z,
            codomain=g,
            f0={n: pair_id(f.f0[n], h.f0[n]) for n in z.nodes},
            f1={e: pair_id(f.f1[e], h.f1[e]) for e in z.edges},
        )

        assert validate_morphism(pairing) == []
        assert compose(left, pairing).key == f.key
        assert compose(right, pairing).key == h.key

    def test_terminal_is_neutral(self):
        c = undirected_cycle(3)

        g = product(c, terminal("undirected")).graph

        assert validate(g) == []
        assert is_isomorphic(g, c) is not None


class TestPushout:
    """Test the pushout of l along the elementary folding."""

    def test_pushout_is_the_arc(self):
        g, left, right = pushout(cherry_to_digon(), elementary_folding())

        assert validate(g) == []
        assert is_isomorphic(g, undirected_arc()) is not None

    def test_square_commutes(self):
        to_digon, fold = cherry_to_digon(), elementary_folding()
        _, left, right = pushout(to_digon, fold)

        one, two = compose(left, to_digon), compose(right, fold)

        assert dict(one.f0) == dict(two.f0)
        assert dict(one.f1) == dict(two.f1)


    def test_two_loops_glued_at_a_point(self):
        """Test c^1_U and c^1_U glued along D_U is the eight graph."""
        loop = undirected_cycle(1)
        point = GraphMorphism(
            domain=undirected_dot(), codomain=loop, f0={"x": "0"}, f1={}
        )

        g = pushout(point, point).graph

        assert validate(g) == []
        assert is_isomorphic(g, eight()) is not None
        assert is_isomorphic(g, undirected_cycle(2)) is None


class TestPullback:
    """Test the pullback of the folding along m."""

    def test_two_digons_sharing_a_node(self):
        g, left, right = pullback(elementary_folding(), digon_to_arc())

        assert len(g.nodes) == 3
        assert len(g.arcs) == 4
        assert validate(g) == []
        assert validate_morphism(left) == validate_morphism(right) == []

    def test_square_commutes(self):
        fold, to_arc = elementary_folding(), digon_to_arc()
        _, left, right = pullback(fold, to_arc)

        one, two = compose(fold, left), compose(to_arc, right)

        assert dict(one.f0) == dict(two.f0)
        assert dict(one.f1) == dict(two.f1)
