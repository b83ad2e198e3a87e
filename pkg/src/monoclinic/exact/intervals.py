"""Closed rational intervals with exact endpoint arithmetic."""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations

from .roots import Interval


def enclose(x, width=Fraction(1, 10**12)) -> Interval:
    """A rational interval around a Fraction (a point) or an algebraic scalar."""
    if isinstance(x, (int, Fraction)):
        return Interval(x, x)
    return x.enclosure(width)


def iadd(a: Interval, b: Interval) -> Interval:
    return Interval(a.lo + b.lo, a.hi + b.hi)


def isub(a: Interval, b: Interval) -> Interval:
    return Interval(a.lo - b.hi, a.hi - b.lo)


def imul(a: Interval, b: Interval) -> Interval:
    prods = (a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi)
    return Interval(min(prods), max(prods))


def excludes_zero(a: Interval) -> bool:
    return a.lo > 0 or a.hi < 0


def _perm_sign(p) -> int:
    s = 1
    p = list(p)
    for i in range(len(p)):
        while p[i] != i:
            j = p[i]
            p[i], p[j] = p[j], p[i]
            s = -s
    return s


def idet(m: list[list[Interval]]) -> Interval:
    """Leibniz expansion of a small square interval matrix."""
    n = len(m)
    acc = Interval(0, 0)
    for p in permutations(range(n)):
        term = Interval(_perm_sign(p), _perm_sign(p))
        for i in range(n):
            term = imul(term, m[i][p[i]])
        acc = iadd(acc, term)
    return acc
