"""Explicit Waldspurger and Bessel model values as exact Laurent polynomials."""

from .algebra import (
    AlgebraError,
    LaurentPoly,
    NotDivisible,
    PoleAtSubstitution,
    RationalFn,
    SatakeNumeric,
    Scaled,
    VarTable,
    eval_rational,
    exact_div,
    substitute,
)

__version__ = "0.1.0"

__all__ = [
    "AlgebraError",
    "LaurentPoly",
    "NotDivisible",
    "PoleAtSubstitution",
    "RationalFn",
    "SatakeNumeric",
    "Scaled",
    "VarTable",
    "eval_rational",
    "exact_div",
    "substitute",
]
