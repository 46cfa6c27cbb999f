"""Exact tautological ring of powers of Y, with projector and Kimura checks."""

from ._tautring import (
    InconsistentSystemError,
    ModelParams,
    ParseError,
    ResourceLimitError,
    StructuralError,
    ck_projectors,
    enumerate_basis,
    euler_char,
    falling_factorial_pairing,
    gram,
    integrate,
    is_zero_in_cohomology,
    kimura_element,
    lemma_ok,
    multiply,
    normalize,
    pair,
    scan_injectivity,
    small_diagonal,
    solve_gamma3,
    verify_ck,
    verify_kimura_vanishing,
    verify_mck,
)

__all__ = [
    "InconsistentSystemError",
    "ModelParams",
    "ParseError",
    "ResourceLimitError",
    "StructuralError",
    "ck_projectors",
    "enumerate_basis",
    "euler_char",
    "falling_factorial_pairing",
    "gram",
    "integrate",
    "is_zero_in_cohomology",
    "kimura_element",
    "lemma_ok",
    "multiply",
    "normalize",
    "pair",
    "scan_injectivity",
    "small_diagonal",
    "solve_gamma3",
    "verify_ck",
    "verify_kimura_vanishing",
    "verify_mck",
]
