"""Exact multiplicities, mixed multiplicities and integral closures of monomial ideals."""

from .core import (
    IdealError,
    MonomialIdeal,
    NotMPrimaryError,
    colength,
    colon,
    contains_monomial,
    frobenius_power,
    intersect,
    maximal_ideal,
    normalize,
    parameter_ideal,
    power,
    product,
    unit_ideal,
)
from .hilbert import (
    BhattacharyaPolynomial,
    HilbertPolynomial,
    MixedMultiplicities,
    bhattacharya_function,
    bhattacharya_polynomial,
    hilbert_function,
    hilbert_polynomial,
    lech_ratio,
    mixed_multiplicities,
    mixed_via_vandermonde,
    multiplicity,
)
from .io import parse_ideal, parse_text
from .newton import NewtonPolyhedron, covolume_2d, integral_closure, is_reduction, np_contains

__version__ = "0.1.0"
