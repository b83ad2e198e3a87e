"""Helpers for the rational base field."""

from __future__ import annotations

from decimal import Decimal, InvalidOperation
from fractions import Fraction

from .univariate import is_zero, sign_of

__all__ = ["is_zero", "parse_rational", "sign", "to_fraction"]


def parse_rational(text) -> Fraction:
    """Parse ``"0.0427"``, ``"-2/41"``, ``"1e-3"`` or an int exactly.

    Binary floats are rejected: ``0.0427`` as a float is not 427/10000.
    """
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int):
        return Fraction(text)
    if isinstance(text, float):
        raise TypeError("floats are inexact; pass the value as a decimal string")
    s = str(text).strip()
    if "/" in s:
        num, den = s.split("/", 1)
        return Fraction(parse_rational(num)) / Fraction(parse_rational(den))
    try:
        return Fraction(Decimal(s))
    except (InvalidOperation, ValueError) as exc:
        raise ValueError(f"not a rational number: {text!r}") from exc


def sign(x) -> int:
    return sign_of(x)


def to_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    v = getattr(x, "rational_value", None)
    if v is not None:
        r = v()
        if r is not None:
            return r
    raise TypeError(f"{x!r} is not rational")
