"""Real root isolation for polynomials of degree at most three.

Isolation uses Descartes' rule of signs on the Moebius-transformed
polynomial with exact bisection.  Coefficients may live in any ordered field
whose elements expose an exact sign (rationals, or algebraic scalars), which
is what lets the same routine isolate scaffold parameters of level-2 T3s.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from ..errors import DegreeTooHigh, ZeroPolynomial
from . import univariate as up

MAX_DEGREE = 3
REPORT_WIDTH = Fraction(1, 10**9)


@dataclass(frozen=True)
class Interval:
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def is_point(self) -> bool:
        return self.lo == self.hi

    def contains(self, x) -> bool:
        return self.lo <= x <= self.hi

    def __str__(self):
        if self.is_point():
            return f"{{{self.lo}}}"
        return f"[{self.lo}, {self.hi}]"


def cauchy_bound(p) -> Fraction:
    p = up.trim(p)
    lead = abs(Fraction(p[-1]))
    return 1 + max((abs(Fraction(c)) / lead for c in p[:-1]), default=Fraction(0))


def _sign_variations(coeffs) -> int:
    signs = [s for s in (up.sign_of(c) for c in coeffs) if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def descartes_bound(p, lo: Fraction, hi: Fraction) -> int:
    """Sign variations of ``(1+t)^n p((lo + hi t)/(1 + t))``: an upper bound on
    the number of roots in the open interval ``(lo, hi)`` with the same parity."""
    n = len(p) - 1
    if all(isinstance(c, (int, Fraction)) for c in p):
        return _sign_variations(_descartes_ints(p, Fraction(lo), Fraction(hi)))
    acc: list = []
    for k, c in enumerate(p):
        if up.is_zero(c):
            continue
        term = [c]
        for _ in range(k):
            term = up.mul(term, [lo, hi])
        for _ in range(n - k):
            term = up.mul(term, [Fraction(1), Fraction(1)])
        acc = up.add(acc, term)
    return _sign_variations(acc)


def _int_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _descartes_ints(p, lo: Fraction, hi: Fraction) -> list[int]:
    # same transform scaled by positive integers: lo = a/d, hi = b/d and
    # the coefficients of p brought to a common denominator
    n = len(p) - 1
    d = lcm(lo.denominator, hi.denominator)
    a, b = lo.numerator * (d // lo.denominator), hi.numerator * (d // hi.denominator)
    den = lcm(*(Fraction(c).denominator for c in p))
    ints = [int(Fraction(c) * den) for c in p]
    lin = [[1]]
    for _ in range(n):
        lin.append(_int_mul(lin[-1], [a, b]))
    one = [[1]]
    for _ in range(n):
        one.append(_int_mul(one[-1], [1, 1]))
    acc = [0] * (n + 1)
    for k, c in enumerate(ints):
        if c == 0:
            continue
        scale = c * d ** (n - k)
        for j, x in enumerate(_int_mul(lin[k], one[n - k])):
            acc[j] += scale * x
    return acc


def _check_degree(p):
    p = up.trim(p)
    if not p:
        raise ZeroPolynomial("cannot isolate the roots of the zero polynomial")
    if len(p) - 1 > MAX_DEGREE:
        raise DegreeTooHigh(f"root isolation is limited to degree {MAX_DEGREE}, got {len(p) - 1}")
    return p


def isolate_real_roots(p, lo, hi) -> list[Interval]:
    """Disjoint isolating intervals for the roots of squarefree ``p`` in the open interval (lo, hi).

    Rational roots hit by bisection are returned as point intervals.
    """
    p = up.trim(p)
    out: list[Interval] = []
    stack = [(Fraction(lo), Fraction(hi))]
    while stack:
        a, b = stack.pop()
        v = descartes_bound(p, a, b)
        if v == 0:
            continue
        if v == 1:
            out.append(Interval(a, b))
            continue
        m = (a + b) / 2
        if up.is_zero(up.evaluate(p, m)):
            out.append(Interval(m, m))
        stack.append((m, b))
        stack.append((a, m))
    return sorted(out, key=lambda iv: iv.lo)


def refine(p, iv: Interval, width) -> Interval:
    """Bisect an isolating interval of a simple root of ``p`` down to ``width``."""
    width = Fraction(width)
    if iv.is_point():
        return iv
    a, b = iv.lo, iv.hi
    sa = up.sign_of(up.evaluate(p, a))
    if sa == 0:
        return Interval(a, a)
    sb = up.sign_of(up.evaluate(p, b))
    if sb == 0:
        return Interval(b, b)
    if sa == sb:
        raise ValueError(f"{iv} is not a sign-changing bracket")
    while b - a > width:
        m = (a + b) / 2
        sm = up.sign_of(up.evaluate(p, m))
        if sm == 0:
            return Interval(m, m)
        if sm == sa:
            a = m
        else:
            b = m
    return Interval(a, b)


def _multiplicity_at(factors, iv: Interval) -> int:
    for f, mult in factors:
        if iv.is_point():
            if up.is_zero(up.evaluate(f, iv.lo)):
                return mult
        elif up.sign_of(up.evaluate(f, iv.lo)) * up.sign_of(up.evaluate(f, iv.hi)) < 0:
            return mult
    raise AssertionError("root not attributed to any squarefree factor")


def isolate_cubic_roots(p, window: Interval | tuple, *, closed: bool = True) -> list[tuple[Interval, int]]:
    """Isolate the distinct real roots of ``p`` (degree <= 3) inside ``window``.

    ``p`` is a coefficient list (ascending) or a univariate
    :class:`~monoclinic.exact.polynomial.Polynomial`.  Returns
    ``(interval, multiplicity)`` pairs, sorted.  Every non-point interval
    brackets a sign change of the squarefree part.  With ``closed=False`` the
    window endpoints themselves are excluded.
    """
    if hasattr(p, "univariate_coeffs"):
        p = p.univariate_coeffs()
    p = _check_degree(p)
    if not isinstance(window, Interval):
        window = Interval(*window)
    if len(p) == 1:
        return []
    sqf = up.squarefree_part(p)
    factors = up.yun(p)
    lo, hi = window.lo, window.hi
    roots: list[Interval] = []
    if closed:
        for end in sorted({lo, hi}):
            if up.is_zero(up.evaluate(sqf, end)):
                roots.append(Interval(end, end))
    if lo < hi:
        for iv in isolate_real_roots(sqf, lo, hi):
            roots.append(iv)
    roots = _tighten(sqf, sorted(roots, key=lambda iv: iv.lo))
    return [(iv, _multiplicity_at(factors, iv)) for iv in roots]


def _tighten(sqf, roots: list[Interval]) -> list[Interval]:
    """Shrink open brackets so their closed endpoints are not roots."""
    out = []
    for iv in roots:
        if iv.is_point():
            out.append(iv)
            continue
        a, b = iv.lo, iv.hi
        while up.is_zero(up.evaluate(sqf, a)) or up.is_zero(up.evaluate(sqf, b)):
            # endpoint belongs to a neighbouring rational root; pull inwards
            m = (a + b) / 2
            if up.is_zero(up.evaluate(sqf, m)):
                a = b = m
                break
            if descartes_bound(sqf, a, m) == 1:
                b = m
            else:
                a = m
        out.append(Interval(a, b))
    return out
