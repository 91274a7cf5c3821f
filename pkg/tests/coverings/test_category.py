"""
Tests for (co)limits and weak equivalences in the category of coverings.
"""

import pytest

from graphtopy.core.errors import (
    InvalidParameterError,
    LoopsPresentError,
    NotACoveringError,
)
from graphtopy.coverings.category import (
    common_cover,
    covering_pullback,
    covering_pushout,
    covering_weak_equiv,
    match_cycles,
)
from graphtopy.coverings.coloring import find_bipartite_coloring, find_n_coloring
from graphtopy.coverings.covering import Covering, covering_degree, is_covering
from graphtopy.graphs.builders import (
    bouquet,
    cycle_quotient,
    elementary_folding,
    undirected_cycle,
)
from graphtopy.graphs.isomorphism import is_isomorphic
from graphtopy.graphs.limits import graph_sum
from graphtopy.graphs.models import GraphMorphism, compose, identity


def rotation(p: int, r: int) -> GraphMorphism:
    cycle = undirected_cycle(p)
    return GraphMorphism(
        domain=cycle,
        codomain=cycle,
        f0={str(n): str((n + r) % p) for n in range(p)},
        f1={f"{n}{s}": f"{(n + r) % p}{s}" for n in range(p) for s in "+-"},
    )


class TestCoveringWeakEquivalence:
    """Test the bounded non-backtracking cycle check."""

    def test_rotation_is_a_weak_equivalence(self):
        assert covering_weak_equiv(rotation(4, 2), 8).holds

    def test_quotient_fails_at_four(self):
        weak = covering_weak_equiv(cycle_quotient(8, 4), 8)

        assert not weak.holds
        assert weak.bounded
        assert weak.report.first_failure == 4

    def test_non_covering_rejected(self):
        with pytest.raises(NotACoveringError):
            covering_weak_equiv(elementary_folding(), 4)

    def test_loops_rejected(self):
        with pytest.raises(LoopsPresentError):
            covering_weak_equiv(identity(bouquet(2)), 4)


class TestConstructions:
    """Test pushouts and pullbacks over a common base."""

    def test_pushout_of_equal_quotients(self):
        f = cycle_quotient(8, 4)
        p = Covering.verify(cycle_quotient(4, 2))

        result = covering_pushout(f, f, p, p)

        assert is_isomorphic(result.graph, undirected_cycle(4)) is not None
        assert covering_degree(result.structure) == 2

    def test_pushout_of_distinct_double_covers(self):
        """Test two different c^4_U -> c^2_U glued over c^8_U cover c^2_U."""
        p = Covering.verify(cycle_quotient(4, 2))
        q = Covering.verify(compose(cycle_quotient(4, 2), rotation(4, 1)))
        f = cycle_quotient(8, 4)
        g = compose(rotation(4, 3), cycle_quotient(8, 4))
        assert dict(p.morphism.f0) != dict(q.morphism.f0)

        result = covering_pushout(f, g, p, q)

        assert is_covering(result.structure.morphism)
        assert is_isomorphic(result.graph, undirected_cycle(4)) is not None
        assert covering_degree(result.structure) == 2

    def test_pushout_glues_the_sheets_of_a_trivial_cover(self):
        """Test the trivial double cover of B_2 glued onto B_2 is B_2."""
        b2 = bouquet(2)
        sheets = graph_sum(b2, b2).graph
        fold = GraphMorphism(
            domain=sheets,
            codomain=b2,
            f0={n: "*" for n in sheets.nodes},
            f1={h: h.split(":")[1] for h in sheets.edges},
        )
        trivial = Covering.verify(fold)

        result = covering_pushout(
            identity(sheets), fold, trivial, Covering.verify(identity(b2))
        )

        assert is_isomorphic(result.graph, b2) is not None
        assert covering_degree(result.structure) == 1
        assert covering_degree(trivial) == 2

    def test_pushout_needs_a_common_base_map(self):
        f = cycle_quotient(8, 4)
        g = compose(rotation(4, 1), f)
        p = Covering.verify(cycle_quotient(4, 2))

        with pytest.raises(NotACoveringError):
            covering_pushout(f, g, p, p)

    def test_fibered_product(self):
        p = Covering.verify(cycle_quotient(4, 2))

        result = covering_pullback(p, p)

        assert len(result.graph.nodes) == 8
        assert covering_degree(result.structure) == 4


class TestCommonCover:
    """Test common covers built from matched cycles."""

    def test_cover_of_a_graph_with_itself(self):
        y = find_n_coloring(undirected_cycle(4), 2)
        assert y is not None

        cc = common_cover(y, y, 4)

        assert is_isomorphic(cc.graph, undirected_cycle(4)) is not None
        assert cc.left_weak.holds
        assert cc.right_weak.holds

    def test_unmatched_cycles(self):
        y = find_n_coloring(undirected_cycle(4), 2)
        z = find_n_coloring(undirected_cycle(8), 2)
        assert y is not None and z is not None

        with pytest.raises(InvalidParameterError):
            match_cycles(y, z, 4)

    def test_different_bases(self):
        y = find_n_coloring(undirected_cycle(4), 2)
        z = find_bipartite_coloring(undirected_cycle(4), 2)
        assert y is not None and z is not None

        with pytest.raises(NotACoveringError):
            common_cover(y, z, 4)
