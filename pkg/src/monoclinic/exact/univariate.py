"""Dense univariate polynomial helpers over an exact field.

Polynomials are lists of coefficients in ascending degree.  The helpers only
use ring operations and an exact zero test, so they work over ``Fraction`` as
well as over :class:`~monoclinic.exact.algebraic.AlgebraicScalar`.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt

Coeffs = list


def is_zero(x) -> bool:
    z = getattr(x, "is_zero", None)
    return z() if z is not None else x == 0


def sign_of(x) -> int:
    s = getattr(x, "sign", None)
    if s is not None:
        return s()
    return (x > 0) - (x < 0)


def trim(p: Coeffs) -> Coeffs:
    p = list(p)
    while p and is_zero(p[-1]):
        p.pop()
    return p


def degree(p: Coeffs) -> int:
    return len(trim(p)) - 1


def evaluate(p: Coeffs, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def add(p: Coeffs, q: Coeffs) -> Coeffs:
    n = max(len(p), len(q))
    return trim([(p[k] if k < len(p) else 0) + (q[k] if k < len(q) else 0) for k in range(n)])


def sub(p: Coeffs, q: Coeffs) -> Coeffs:
    return add(p, [-c for c in q])


def mul(p: Coeffs, q: Coeffs) -> Coeffs:
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if is_zero(a):
            continue
        for j, b in enumerate(q):
            out[i + j] = out[i + j] + a * b
    return trim(out)


def scale(p: Coeffs, c) -> Coeffs:
    return trim([a * c for a in p])


def derivative(p: Coeffs) -> Coeffs:
    return trim([k * p[k] for k in range(1, len(p))])


def divmod_poly(p: Coeffs, q: Coeffs) -> tuple[Coeffs, Coeffs]:
    q = trim(q)
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    r = trim(p)
    dq = len(q) - 1
    lead = q[-1]
    quot = [0] * max(len(r) - dq, 1)
    while len(r) - 1 >= dq and r:
        k = len(r) - 1 - dq
        c = r[-1] / lead
        quot[k] = c
        for i, b in enumerate(q):
            r[i + k] = r[i + k] - c * b
        r = trim(r[:-1]) if is_zero(r[-1]) else trim(r)
    return trim(quot), r


def monic(p: Coeffs) -> Coeffs:
    p = trim(p)
    if not p:
        return []
    lead = p[-1]
    return [c / lead for c in p]


def gcd_poly(p: Coeffs, q: Coeffs) -> Coeffs:
    a, b = trim(p), trim(q)
    while b:
        _, r = divmod_poly(a, b)
        a, b = b, r
    return monic(a)


def squarefree_part(p: Coeffs) -> Coeffs:
    g = gcd_poly(p, derivative(p))
    q, _ = divmod_poly(p, g)
    return monic(q)


def yun(p: Coeffs) -> list[tuple[Coeffs, int]]:
    """Squarefree decomposition ``p = c * prod(a_i ** i)``; returns ``[(a_i, i)]`` with deg a_i >= 1."""
    p = monic(p)
    out = []
    dp = derivative(p)
    a = gcd_poly(p, dp)
    b, _ = divmod_poly(p, a)
    c, _ = divmod_poly(dp, a)
    d = sub(c, derivative(b))
    i = 1
    while degree(b) > 0:
        a = gcd_poly(b, d)
        b, _ = divmod_poly(b, a)
        c, _ = divmod_poly(d, a)
        d = sub(c, derivative(b))
        if degree(a) > 0:
            out.append((monic(a), i))
        i += 1
    return out


def compose_linear(p: Coeffs, a, b) -> Coeffs:
    """Coefficients of ``x -> p(a + b x)``."""
    out: Coeffs = []
    power = [Fraction(1)]
    for c in p:
        out = add(out, scale(power, c))
        power = mul(power, [a, b])
    return out


def to_integer_coeffs(p: Coeffs) -> list[int]:
    """Primitive integer multiple of a rational polynomial."""
    p = [Fraction(c) for c in trim(p)]
    den = 1
    for c in p:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in p]
    g = 0
    for v in ints:
        g = gcd(g, v)
    return [v // g for v in ints] if g else ints


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
    return small + large[::-1]


def rational_roots(p: Coeffs) -> list[Fraction]:
    """All rational roots of a rational polynomial (rational root theorem)."""
    ints = to_integer_coeffs(p)
    if not ints:
        raise ValueError("zero polynomial has every number as a root")
    roots = set()
    k = 0
    while ints[k] == 0:
        roots.add(Fraction(0))
        k += 1
    ints = ints[k:]
    if len(ints) == 1:
        return sorted(roots)
    const, lead = ints[0], ints[-1]
    # Divisor enumeration is fine for the small coefficients seen here; fall
    # back to the squarefree part's roots found by isolation otherwise.
    if abs(const) > 10**4 or abs(lead) > 10**4:
        return sorted(roots | set(_rational_roots_by_isolation(ints)))
    divs = _divisors(lead)
    for num in _divisors(const):
        for den in divs:
            if gcd(num, den) != 1:
                continue
            for n in (num, -num):
                if _homogeneous_value(ints, n, den) == 0:
                    roots.add(Fraction(n, den))
    return sorted(roots)


def _homogeneous_value(ints: list[int], num: int, den: int) -> int:
    """den^deg * p(num / den), in integers."""
    deg = len(ints) - 1
    acc, npow = 0, 1
    dpows = [1]
    for _ in range(deg):
        dpows.append(dpows[-1] * den)
    for k, c in enumerate(ints):
        acc += c * npow * dpows[deg - k]
        npow *= num
    return acc


def _rational_roots_by_isolation(ints: list[int]) -> list[Fraction]:
    from .roots import cauchy_bound, isolate_real_roots, refine

    found = []
    sqf = squarefree_part([Fraction(c) for c in ints])
    lead = abs(ints[-1])
    bound = cauchy_bound(sqf)
    for iv in isolate_real_roots(sqf, -bound, bound):
        if iv.lo == iv.hi:
            found.append(iv.lo)
            continue
        # distinct fractions with denominators dividing ``lead`` are >= 1/lead^2 apart
        iv = refine(sqf, iv, Fraction(1, 2 * lead * lead))
        if iv.lo == iv.hi:
            found.append(iv.lo)
            continue
        cand = ((iv.lo + iv.hi) / 2).limit_denominator(lead)
        if evaluate(ints, cand) == 0:
            found.append(cand)
    return found
