"""
Tests for G-set homotopy through the directed Cayley functor.
"""

import pytest

from graphtopy.core.errors import GeneratorMismatchError, InvalidActionError
from graphtopy.graphs.isomorphism import is_isomorphic
from graphtopy.graphs.validation import validate_morphism
from graphtopy.gsets.action import GSetAction, GSetMorphism
from graphtopy.gsets.cayley import cayley_directed
from graphtopy.gsets.dessins import d0, d1, state_collapse
from graphtopy.gsets.homotopy import (
    is_cofibrant_fnset,
    weak_equiv_gset_morphism,
    weak_equiv_gsets,
)
from graphtopy.zeta.homs import counting_bijectivity


class TestWeakEquivalence:
    def test_d0_and_d1(self):
        """Test D_0 and D_1 are weakly equivalent but not isomorphic."""
        assert weak_equiv_gsets(d0().action, d1().action)
        pair = cayley_directed(d0().action), cayley_directed(d1().action)
        assert is_isomorphic(*pair) is None

    def test_generator_lists_must_agree(self):
        with pytest.raises(GeneratorMismatchError):
            weak_equiv_gsets(d0().action, GSetAction.trivial(["a", "b"]))

    def test_state_collapse(self):
        """Test the collapse Cal(D_1) -> Cal(D_0) counts closed walks bijectively."""
        f = state_collapse()

        assert validate_morphism(f) == []
        assert counting_bijectivity(f, 6, "directed").bijective

    def test_orbit_inclusion_is_not_a_weak_equivalence(self):
        """Test a fixed point inside a 2-orbit set is seen at p = 1."""
        x = GSetAction.from_maps(["*"], {"a": {}})
        y = GSetAction.from_maps(["*", "u", "v"], {"a": {"u": "v", "v": "u"}})
        f = GSetMorphism(x, y, {"*": "*"})

        report = weak_equiv_gset_morphism(f, 4)

        assert report.first_failure == 2
        assert [r.p for r in report.rows] == [1, 2]


class TestCofibrancy:
    def test_single_loop(self):
        verdict = is_cofibrant_fnset(GSetAction.trivial(["a"]))

        assert verdict.cofibrant

    def test_single_generator_cycle(self):
        cycle = {"0": "1", "1": "2", "2": "0"}
        x = GSetAction.from_maps(["0", "1", "2"], {"a": cycle})

        assert is_cofibrant_fnset(x).cofibrant

    def test_two_generators_are_never_cofibrant(self):
        verdict = is_cofibrant_fnset(GSetAction.trivial(["a", "b"]))

        assert not verdict.cofibrant
        assert "2 generators" in verdict.reason

    def test_d1(self):
        assert not is_cofibrant_fnset(d1().action).cofibrant

    def test_involutive_refused(self):
        with pytest.raises(InvalidActionError):
            is_cofibrant_fnset(GSetAction.trivial(["a"], kind="involutive"))
