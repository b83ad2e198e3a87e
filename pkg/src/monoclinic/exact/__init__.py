"""Exact scalar towers: rationals, polynomials over Q, real algebraic numbers."""

from fractions import Fraction

from .algebraic import AlgebraicScalar, from_root, same_field
from .polynomial import Polynomial, det3, poly_det3, symbols
from .roots import Interval, isolate_cubic_roots, refine
from .scalars import parse_rational, sign

__all__ = [
    "AlgebraicScalar",
    "Fraction",
    "Interval",
    "Polynomial",
    "det3",
    "from_root",
    "isolate_cubic_roots",
    "parse_rational",
    "poly_det3",
    "refine",
    "same_field",
    "sign",
    "symbols",
]
