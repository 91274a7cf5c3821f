"""
Tests for G-set actions and equivariant maps.
"""

import pytest

from graphtopy.core.errors import GeneratorMismatchError, InvalidActionError
from graphtopy.gsets.action import (
    GSetAction,
    GSetMorphism,
    is_loop_free_gset,
    same_generators,
)
from graphtopy.gsets.dessins import d1


@pytest.fixture
def swap() -> GSetAction:
    return GSetAction.from_maps(["x", "y"], {"a": {"x": "y", "y": "x"}})


class TestGSetAction:
    """Test construction and validation."""

    def test_missing_entries_are_fixed(self):
        x = GSetAction.from_maps(["p", "q", "r"], {"a": {"p": "q", "q": "p"}})

        assert x("a", "r") == "r"
        assert x.fixed_points("a") == ["r"]

    def test_permutation(self, swap):
        assert swap.permutation("a").cyclic_form == [[0, 1]]

    def test_trivial(self):
        t = GSetAction.trivial(["a0", "a1"], kind="involutive")

        assert t.carrier == frozenset({"*"})
        assert t.generators == ("a0", "a1")
        assert t.validate() == []

    def test_not_a_bijection(self):
        x = GSetAction.from_maps(["x", "y"], {"a": {"x": "y", "y": "y"}})

        with pytest.raises(InvalidActionError) as exc:
            x.ensure_valid()

        assert exc.value.code == "GT-008"
        assert exc.value.message == "action is not a bijection"
        assert exc.value.subject == "a"

    def test_not_an_involution(self):
        x = GSetAction.from_maps(
            ["1", "2", "3"], {"a": {"1": "2", "2": "3", "3": "1"}}, kind="involutive"
        )

        assert [d.message for d in x.validate()] == ["generator is not an involution"]

    def test_not_total(self):
        x = GSetAction(
            carrier=frozenset({"x", "y"}), generators=("a",), action={"a": {"x": "x"}}
        )

        assert [d.message for d in x.validate()] == ["action is not total"]

    def test_loop_free(self, swap):
        assert is_loop_free_gset(swap)
        assert not is_loop_free_gset(GSetAction.trivial(["a"]))


class TestGSetMorphism:
    """Test equivariance checks."""

    def test_map_to_the_point(self, swap):
        f = GSetMorphism(swap, GSetAction.trivial(["a"]), {"x": "*", "y": "*"})

        assert f.ensure_valid() is f

    def test_not_equivariant(self):
        x = d1().action
        f = GSetMorphism(x, x, {"x": "x", "y": "x"})

        messages = {(d.message, d.subject) for d in f.validate()}

        assert ("not equivariant for s1", "x") in messages

    def test_generator_lists_must_agree(self, swap):
        with pytest.raises(GeneratorMismatchError):
            same_generators(swap, GSetAction.trivial(["b"]))
