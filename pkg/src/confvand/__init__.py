"""Exact inversion of confluent Vandermonde matrices via the Hermite basis."""

from .companion import MonicCoefficients, companion_matrix, expand_monic, jordan_form, verify_similarity
from .hermite import (
    HermiteBasis,
    NodeSystem,
    PartialFraction,
    cofactor,
    hermite_basis,
    interpolate,
    jets_of,
    partial_fractions,
    recombine,
)
from .matrix import Matrix, SingularMatrixError, oracle_invert, oracle_solve
from .poly import Polynomial, derivative, evaluate, series_reciprocal_at, taylor_coefficients_at
from .scalar import EXACT, FLOAT, Field, binomial, factorial, get_field, parse_scalar
from .vandermonde import (
    build_confluent,
    build_rs,
    build_usual,
    invert_confluent,
    invert_rs,
    invert_single_node,
    invert_two_nodes,
    invert_usual,
    invert_usual_sigma,
    solve_confluent,
    solve_usual,
)

__version__ = "0.1.0"
