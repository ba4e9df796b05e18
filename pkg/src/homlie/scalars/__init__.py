"""Exact scalars: Q, Q(i) and the rational-function field Q(i)(a, b, c)."""

from fractions import Fraction

from .gaussian import GaussianRational, I, gauss
from .parse import format_poly, format_scalar, parse_scalar
from .poly import VARS, MultivarPoly
from .ratfunc import (RationalFunction, Scalar, invert, is_zero, re_im, substitute,
                      symbols, to_scalar, var, variables_of)

Rational = Fraction

__all__ = [
    "Fraction", "Rational", "GaussianRational", "I", "gauss", "MultivarPoly", "VARS",
    "RationalFunction", "Scalar", "to_scalar", "is_zero", "invert", "substitute",
    "symbols", "var", "variables_of", "re_im", "parse_scalar", "format_scalar",
    "format_poly",
]
