"""Exact coefficient rings: q-monomial polynomials, Laurent polynomials, fields."""

from .laurent import LaurentPolynomial, cyclotomic, vanishes_at_root_of_unity
from .qnumbers import mahonian_factorial, symmetric_q_binomial, symmetric_q_factorial
from .qpoly import QMonomial, QPolynomial
from .rational import RationalFunction, field_div, to_field
from .specialize import CARTAN_TYPES, Specialization, cartan_type, default_letter_index, specialize


def poly_add(a, b):
    return a + b


def poly_mul(a, b):
    return a * b


__all__ = [
    "LaurentPolynomial",
    "QMonomial",
    "QPolynomial",
    "RationalFunction",
    "Specialization",
    "CARTAN_TYPES",
    "cartan_type",
    "cyclotomic",
    "default_letter_index",
    "field_div",
    "mahonian_factorial",
    "poly_add",
    "poly_mul",
    "specialize",
    "symmetric_q_binomial",
    "symmetric_q_factorial",
    "to_field",
    "vanishes_at_root_of_unity",
]
