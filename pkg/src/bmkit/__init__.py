"""Exact Boros-Moll coefficients, their recurrences and inequalities, and an
enumeration oracle for the partially 2-colored permutation model."""

from bmkit.arith import binomial, format_rational, parse_rational, rising_factorial
from bmkit.core import (
    CoefficientTable,
    big_d,
    big_d_from_d,
    big_d_single_sum,
    check_log_concavity,
    check_recurrence_D,
    check_unimodality,
    d_coeffs,
    d_coeffs_by_expansion,
    d_coeffs_by_recurrence,
    identity_a1,
    ineq_section4,
    p_eval_double,
    p_eval_single,
)
from bmkit.perm import FamilyTag, PartiallyColoredPermutation
from bmkit.quadrature import integral_check

__version__ = "0.1.0"

__all__ = [
    "CoefficientTable",
    "FamilyTag",
    "PartiallyColoredPermutation",
    "big_d",
    "big_d_from_d",
    "big_d_single_sum",
    "binomial",
    "check_log_concavity",
    "check_recurrence_D",
    "check_unimodality",
    "d_coeffs",
    "d_coeffs_by_expansion",
    "d_coeffs_by_recurrence",
    "format_rational",
    "identity_a1",
    "ineq_section4",
    "integral_check",
    "p_eval_double",
    "p_eval_single",
    "parse_rational",
    "rising_factorial",
]
