"""Exact continued fractions, the modular group, and finitely generated
totally ordered dimension groups."""

from .errors import (
    CFGroupsError,
    DomainError,
    ParseError,
    PrecisionExhausted,
)
from .matrices import UniModMatrix, parse_matrix
from .realnum import (
    PrecisionReal,
    QuadraticSurd,
    Rational,
    RealValue,
    format_real,
    parse_real,
    real_compare,
    real_floor,
    surd_normalize,
)

__all__ = [
    "CFGroupsError", "DomainError", "ParseError", "PrecisionExhausted",
    "UniModMatrix", "parse_matrix",
    "PrecisionReal", "QuadraticSurd", "Rational", "RealValue",
    "format_real", "parse_real", "real_compare", "real_floor",
    "surd_normalize",
]
