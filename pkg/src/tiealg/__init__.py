"""Exact computations in the braids-and-ties algebra E_n(u) and its representations at u = 1."""
from .rewrite import (
    Certificate,
    check_identity,
    dimension,
    mul_reduced,
    normal_form,
    span_basis,
    structure_constants,
)
from .scalars import RationalFunction, parse_rational_function
from .words import Element, parse_element

__all__ = [
    "Certificate",
    "Element",
    "RationalFunction",
    "check_identity",
    "dimension",
    "mul_reduced",
    "normal_form",
    "parse_element",
    "parse_rational_function",
    "span_basis",
    "structure_constants",
]

__version__ = "0.1.0"
