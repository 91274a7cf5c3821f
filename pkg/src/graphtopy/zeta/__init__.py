"""Hom enumeration, cycle counting, zeta and Ihara series, replacements."""

from .counting import (
    adjacency_matrix,
    closed_walk_count,
    cycle_count_vector,
    hashimoto_count,
    hashimoto_matrix,
    nb_count_vector,
)
from .homs import (
    BijectivityReport,
    CycleFamily,
    closed_walks,
    count_homs,
    counting_bijectivity,
    enumerate_homs,
    iter_homs,
    nb_cycles,
    two_out_of_three,
)
from .replacement import (
    HomotopyHomProfile,
    PrimitiveMultiplicities,
    homotopy_hom_profile,
    primitive_multiplicities,
)
from .series import IntPolynomial, RationalPowerSeries
from .zeta import (
    BassCheck,
    bass_check,
    ihara_rational,
    ihara_series,
    weak_equiv_directed,
    zeta_rational,
    zeta_series,
)

__all__ = [
    "IntPolynomial",
    "RationalPowerSeries",
    "adjacency_matrix",
    "hashimoto_matrix",
    "closed_walk_count",
    "hashimoto_count",
    "cycle_count_vector",
    "nb_count_vector",
    "iter_homs",
    "enumerate_homs",
    "count_homs",
    "closed_walks",
    "nb_cycles",
    "CycleFamily",
    "BijectivityReport",
    "counting_bijectivity",
    "two_out_of_three",
    "zeta_series",
    "zeta_rational",
    "ihara_series",
    "ihara_rational",
    "BassCheck",
    "bass_check",
    "weak_equiv_directed",
    "PrimitiveMultiplicities",
    "primitive_multiplicities",
    "HomotopyHomProfile",
    "homotopy_hom_profile",
]
