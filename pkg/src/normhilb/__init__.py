"""Exact normal filtrations of monomial ideals and their Hilbert coefficients."""

from .closure import ClosureCache, NewtonPolyhedron, closure_power, membership_level, oracle_membership, rees_gap
from .filtration import graded_quotient_lengths, hi_check, reduction_number
from .hilbert import BinomialPolynomial, HilbertTable, colength, fit, normal_table
from .monomial import MonomialIdeal, contains_monomial, equals, intersect, is_m_primary, minimalize, multiply, power

__version__ = "0.1.0"

__all__ = [
    "BinomialPolynomial",
    "ClosureCache",
    "HilbertTable",
    "MonomialIdeal",
    "NewtonPolyhedron",
    "closure_power",
    "colength",
    "contains_monomial",
    "equals",
    "fit",
    "graded_quotient_lengths",
    "hi_check",
    "intersect",
    "is_m_primary",
    "membership_level",
    "minimalize",
    "multiply",
    "normal_table",
    "oracle_membership",
    "power",
    "reduction_number",
    "rees_gap",
]
