"""
Tests for primitive multiplicities and the homotopy Hom profile.
"""

import warnings

import pytest
from sympy.utilities.exceptions import SymPyDeprecationWarning

from graphtopy.core.errors import InvalidParameterError
from graphtopy.graphs.builders import directed_bouquet, directed_cycle
from graphtopy.zeta.replacement import homotopy_hom_profile, primitive_multiplicities


def test_bouquet_multiplicities():
    """Test m_ℓ(B_2) counts binary necklaces of period ℓ."""
    found = primitive_multiplicities(directed_bouquet(2), 4)

    assert found.multiplicities == {1: 2, 2: 1, 3: 2, 4: 3}
    assert all(found.reconstruct(p) == 2**p for p in range(1, 5))


def test_cycle_is_its_own_replacement():
    """Test c_3 has a single primitive cycle of length 3."""
    assert primitive_multiplicities(directed_cycle(3), 6).nonzero() == {3: 1}


def test_inversion_uses_current_sympy_api():
    """Test the Möbius inversion raises no sympy deprecation warning."""
    with warnings.catch_warnings():
        warnings.simplefilter("error", SymPyDeprecationWarning)
        found = primitive_multiplicities(directed_bouquet(3), 6)

    assert found.multiplicities[6] == 116
    assert all(isinstance(m, int) for m in found.multiplicities.values())


def test_bound_must_be_positive():
    """Test L = 0 is rejected."""
    with pytest.raises(InvalidParameterError):
        primitive_multiplicities(directed_cycle(3), 0)


def test_multiplicities_are_integral(directed_corpus):
    """Test Möbius inversion lands in the nonnegative integers."""
    for g in directed_corpus:
        found = primitive_multiplicities(g, 5)
        assert all(m >= 0 for m in found.multiplicities.values())


def test_hom_profile():
    """Test Hom(C(c_2), C(B_1)) is one point and Hom(C(B_1), C(c_2)) is empty."""
    forward = homotopy_hom_profile(directed_cycle(2), directed_bouquet(1), 4)
    backward = homotopy_hom_profile(directed_bouquet(1), directed_cycle(2), 4)

    assert forward.as_table() == {2: 1}
    assert forward.total == 1
    assert backward.as_table() == {1: 0}
    assert backward.total == 0
