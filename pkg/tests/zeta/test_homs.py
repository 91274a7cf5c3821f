"""
Tests for Hom enumeration and counting bijectivity.
"""

import pytest

from graphtopy.core.errors import FlavorMismatchError, InvalidParameterError
from graphtopy.graphs.builders import (
    arc,
    bouquet,
    cherry,
    cherry_to_digon,
    cycle_quotient,
    digon_to_arc,
    directed_bouquet,
    directed_cycle,
    elementary_folding,
    undirected_arc,
    undirected_cycle,
)
from graphtopy.graphs.models import identity
from graphtopy.graphs.validation import validate_morphism
from graphtopy.zeta.homs import (
    BijectivityRow,
    closed_walks,
    count_homs,
    counting_bijectivity,
    enumerate_homs,
    nb_cycles,
    two_out_of_three,
)


class TestEnumeration:
    """Test Hom(X, Y) for small graphs."""

    def test_directed_counts(self):
        assert count_homs(directed_cycle(2), directed_bouquet(1)) == 1
        assert count_homs(arc(), directed_cycle(3)) == 3
        assert count_homs(directed_cycle(2), directed_cycle(3)) == 0

    def test_enumeration_matches_count(self):
        homs = enumerate_homs(directed_cycle(2), directed_bouquet(2))

        assert len(homs) == count_homs(directed_cycle(2), directed_bouquet(2)) == 4
        assert all(validate_morphism(f) == [] for f in homs)
        assert len({f.key for f in homs}) == 4

    def test_arc_folds_onto_a_degenerate_loop(self):
        assert count_homs(undirected_arc(), bouquet(1)) == 1

    def test_degenerate_loop_needs_a_degenerate_image(self):
        assert count_homs(bouquet(1), undirected_arc()) == 0

    def test_cherry_into_the_arc(self):
        homs = enumerate_homs(cherry(), undirected_arc())

        assert len(homs) == 2
        assert all(validate_morphism(f) == [] for f in homs)

    def test_flavor_mismatch(self):
        with pytest.raises(FlavorMismatchError):
            count_homs(arc(), undirected_arc())


class TestClosedWalks:
    """Test cycle families."""

    def test_triangle_nonbacktracking(self):
        cycles = nb_cycles(undirected_cycle(3), 3)

        assert len(cycles) == 6
        assert all(validate_morphism(h) == [] for h in cycles)

    def test_p_must_be_positive(self):
        with pytest.raises(InvalidParameterError):
            closed_walks(directed_cycle(2), 0)

    def test_backtracking_needs_undirected(self):
        with pytest.raises(FlavorMismatchError):
            closed_walks(directed_cycle(2), 2, nonbacktracking=True)


class TestCountingBijectivity:
    """Test weak equivalences decided on cycle counts."""

    def test_folding_fails_on_all_cycles(self):
        report = counting_bijectivity(elementary_folding(), 8, "undirected")

        assert report.first_failure == 2
        assert report.rows == [
            BijectivityRow(1, 0, 0, 0, True),
            BijectivityRow(2, 4, 2, 2, False),
        ]

    def test_folding_is_bijective_on_nonbacktracking_cycles(self):
        report = counting_bijectivity(elementary_folding(), 8, "nonbacktracking")

        assert report.bijective
        assert len(report.rows) == 8

    def test_quotient_is_not_injective(self):
        report = counting_bijectivity(cycle_quotient(4, 2), 4, "undirected")
        row = report.rows[-1]

        assert report.first_failure == 2
        assert (row.domain, row.codomain, row.injective) == (8, 8, False)

    @pytest.mark.parametrize("family", ["undirected", "nonbacktracking"])
    def test_identity_is_bijective(self, family):
        assert counting_bijectivity(identity(undirected_cycle(3)), 6, family).bijective

    def test_family_must_match_flavor(self):
        with pytest.raises(FlavorMismatchError):
            counting_bijectivity(elementary_folding(), 2, "directed")

    def test_two_out_of_three(self):
        """Test l and m fail while their composite, the folding, succeeds."""
        verdict = two_out_of_three(
            cherry_to_digon(), digon_to_arc(), 4, "nonbacktracking"
        )

        assert (verdict.f, verdict.g, verdict.composite) == (False, False, True)
        assert verdict.holds
