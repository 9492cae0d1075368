"""Exact moments of characteristic polynomials of the Jacobi beta-ensemble,
computed through a closed-form matrix difference system, with a brute-force
oracle for checking the underlying identities."""

from .difference_system import (
    GenericParams,
    Matrix,
    build_A,
    build_D,
    build_L,
    build_primed,
    build_tilde,
    build_U,
    build_U_inverse,
    check_tilde_consistency,
)
from .errors import DivergentIntegral, ExpansionTooLarge, ParameterSingular
from .exact_arith import Poly, binomial, poch, poly_reflect
from .moments import (
    MomentRequest,
    MomentResult,
    chain,
    closed_form_mu1,
    gauss_2f1_terminating,
    initial_vector,
    moment_polynomial,
)
from .selberg import (
    SelbergParams,
    selberg_ratio_alpha,
    selberg_ratio_beta,
    selberg_value_numeric,
)

__version__ = "0.1.0"

__all__ = [
    "DivergentIntegral",
    "ExpansionTooLarge",
    "GenericParams",
    "Matrix",
    "MomentRequest",
    "MomentResult",
    "ParameterSingular",
    "Poly",
    "SelbergParams",
    "binomial",
    "build_A",
    "build_D",
    "build_L",
    "build_U",
    "build_U_inverse",
    "build_primed",
    "build_tilde",
    "chain",
    "check_tilde_consistency",
    "closed_form_mu1",
    "gauss_2f1_terminating",
    "initial_vector",
    "moment_polynomial",
    "poch",
    "poly_reflect",
    "selberg_ratio_alpha",
    "selberg_ratio_beta",
    "selberg_value_numeric",
]
