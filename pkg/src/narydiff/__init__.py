"""Exact n-ary differences built from Vandermonde determinants."""

from narydiff.difference import (
    Decomposition,
    DoubledMatrixReport,
    decompose,
    difference_nary,
    distance_nary,
    doubled_determinant,
)
from narydiff.partial_fractions import (
    DuplicateRootError,
    PartialFractionExpansion,
    Polynomial,
    coefficients_from_roots,
    expand_reciprocal,
    recombine,
)
from narydiff.scalar import Rational, format_rational, parse_rational, rational_arith
from narydiff.theta_difference import (
    DecompositionResidual,
    ThetaDifference,
    theta_claimed_decomposition_residual,
    theta_diff,
    theta_translation_check,
)
from narydiff.vandermonde import (
    Bracket,
    bracket,
    build_matrix,
    det_fraction_free,
    det_laplace,
    det_product,
)

__version__ = "0.1.0"

__all__ = [
    "Bracket",
    "Decomposition",
    "DecompositionResidual",
    "DoubledMatrixReport",
    "DuplicateRootError",
    "PartialFractionExpansion",
    "Polynomial",
    "Rational",
    "ThetaDifference",
    "bracket",
    "build_matrix",
    "coefficients_from_roots",
    "decompose",
    "det_fraction_free",
    "det_laplace",
    "det_product",
    "difference_nary",
    "distance_nary",
    "doubled_determinant",
    "expand_reciprocal",
    "format_rational",
    "parse_rational",
    "rational_arith",
    "recombine",
    "theta_claimed_decomposition_residual",
    "theta_diff",
    "theta_translation_check",
]
