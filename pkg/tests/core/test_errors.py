"""
Tests for graphtopy.core.errors module.
"""

import pytest

from graphtopy.core.errors import (
    ConsistencyError,
    Diagnostic,
    DisconnectedGraphError,
    FlavorMismatchError,
    GeneratorMismatchError,
    GraphtopyError,
    InputFormatError,
    InvalidActionError,
    InvalidGraphError,
    InvalidParameterError,
    LoopsPresentError,
    NotACoveringError,
    UnknownGraphKindError,
)


@pytest.mark.parametrize(
    "error, code",
    [
        (InvalidGraphError("bad"), "GT-001"),
        (UnknownGraphKindError("Q"), "GT-002"),
        (InvalidParameterError("p < 1"), "GT-003"),
        (FlavorMismatchError(), "GT-004"),
        (LoopsPresentError("loop"), "GT-005"),
        (NotACoveringError("star"), "GT-006"),
        (GeneratorMismatchError(["a"], ["b"]), "GT-007"),
        (InvalidActionError("perm"), "GT-008"),
        (ConsistencyError("m_2"), "GT-009"),
        (InputFormatError("json"), "GT-010"),
        (DisconnectedGraphError("two parts"), "GT-011"),
    ],
)
def test_error_codes(error, code):
    """Test every error carries its stable code."""
    assert isinstance(error, GraphtopyError)
    assert error.code == code
    assert str(error).startswith(f"[{code}]")


def test_error_message_with_subject():
    """Test subjects are appended in parentheses."""
    error = InvalidGraphError("dangling target", subject="a")

    assert str(error) == "[GT-001] dangling target (a)"
    assert error.subject == "a"


def test_input_format_error_location():
    """Test line and column are rendered when known."""
    error = InputFormatError("Malformed JSON", source="g.json", line=3, column=5)

    assert str(error) == "[GT-010] Malformed JSON (g.json) at line 3, column 5"
    assert error.line == 3


def test_generator_mismatch_keeps_both_lists():
    """Test both generator lists are kept for reporting."""
    error = GeneratorMismatchError(["s0", "s1"], ["a0"])

    assert error.left == ["s0", "s1"]
    assert error.right == ["a0"]


class TestDiagnostic:
    """Test Diagnostic value semantics."""

    def test_equality_and_hash(self):
        a = Diagnostic("GT-001", "missing source", "e1")
        b = Diagnostic("GT-001", "missing source", "e1")

        assert a == b
        assert len({a, b}) == 1
        assert a != Diagnostic("GT-001", "missing target", "e1")

    def test_to_dict(self):
        d = Diagnostic("GT-006", "star map not injective", "v1")

        assert d.to_dict() == {
            "code": "GT-006",
            "message": "star map not injective",
            "subject": "v1",
        }

    def test_repr(self):
        assert repr(Diagnostic("GT-001", "oops", "x")) == "[GT-001] (x) oops"
        assert repr(Diagnostic("GT-001", "oops")) == "[GT-001] oops"
