"""Real algebraic numbers of degree at most three.

An :class:`AlgebraicField` is a squarefree defining polynomial together with a
rational interval isolating one of its real roots ``theta``.  Elements of
``Q(theta)`` are :class:`AlgebraicScalar` residues modulo the defining
polynomial.  Sign and zero decisions are exact: zero tests reduce to residue
arithmetic (plus a gcd when the defining polynomial is reducible), and signs
are settled by refining the isolating interval until an interval evaluation
excludes zero.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

from ..errors import DegreeTooHigh, DivisionByZero, MixedField
from . import univariate as up
from .roots import MAX_DEGREE, Interval, isolate_cubic_roots, refine


def _iv_mul(a: tuple, b: tuple) -> tuple:
    prods = (a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1])
    return (min(prods), max(prods))


def interval_horner(coeffs, lo: Fraction, hi: Fraction) -> tuple[Fraction, Fraction]:
    """Enclosure of ``{p(x) : lo <= x <= hi}`` by naive interval Horner."""
    acc = (Fraction(0), Fraction(0))
    for c in reversed(coeffs):
        acc = _iv_mul(acc, (lo, hi))
        acc = (acc[0] + c, acc[1] + c)
    return acc


class AlgebraicField:
    """``Q(theta)`` for one isolated real root ``theta`` of a squarefree polynomial."""

    def __init__(self, defining, isolating: Interval):
        poly = up.monic([Fraction(c) for c in defining])
        deg = len(poly) - 1
        if deg < 1:
            raise ValueError("defining polynomial must have positive degree")
        if deg > MAX_DEGREE:
            raise DegreeTooHigh(f"defining polynomial has degree {deg} > {MAX_DEGREE}")
        if up.degree(up.gcd_poly(poly, up.derivative(poly))) > 0:
            raise ValueError("defining polynomial is not squarefree")
        lo_s = up.sign_of(up.evaluate(poly, isolating.lo))
        hi_s = up.sign_of(up.evaluate(poly, isolating.hi))
        if lo_s * hi_s >= 0:
            raise ValueError(f"{isolating} does not bracket a simple root with nonzero endpoint signs")
        self.defining = poly
        self.degree = deg
        self._iv = isolating
        # degree <= 3 with no rational root is irreducible over Q
        self.minimal = deg == 1 or not up.rational_roots(poly)

    # -- the isolating interval (a refinable cache, the root never changes) --
    @property
    def interval(self) -> Interval:
        return self._iv

    def refine(self, width) -> Interval:
        if self._iv.width > width:
            self._iv = refine(self.defining, self._iv, width)
        return self._iv

    def same_as(self, other: AlgebraicField) -> bool:
        if self is other:
            return True
        if self.defining != other.defining:
            return False
        lo = max(self._iv.lo, other._iv.lo)
        hi = min(self._iv.hi, other._iv.hi)
        if lo > hi:
            return False
        s_lo = up.sign_of(up.evaluate(self.defining, lo))
        s_hi = up.sign_of(up.evaluate(self.defining, hi))
        return s_lo * s_hi < 0

    def gen(self) -> AlgebraicScalar:
        if self.degree == 1:
            return AlgebraicScalar(self, [-self.defining[0]])
        return AlgebraicScalar(self, [Fraction(0), Fraction(1)])

    def element(self, rep) -> AlgebraicScalar:
        return AlgebraicScalar(self, rep)

    def reduce(self, rep) -> list:
        rep = up.trim([Fraction(c) for c in rep])
        if len(rep) > self.degree:
            _, rep = up.divmod_poly(rep, self.defining)
        return rep

    def approx(self) -> float:
        iv = self.refine(Fraction(1, 2**60))
        return float(iv.mid)

    def __repr__(self):
        return f"AlgebraicField(defining={self.defining!r}, isolating={self._iv})"


class AlgebraicScalar:
    """An element of ``Q(theta)`` stored as a residue of degree < deg(defining)."""

    __slots__ = ("field", "rep")
    __hash__ = None  # equality is exact but not hash-stable

    def __init__(self, field: AlgebraicField, rep):
        self.field = field
        self.rep = tuple(field.reduce(rep))

    # -- coercion -------------------------------------------------------
    def _lift(self, other):
        if isinstance(other, AlgebraicScalar):
            if other.field is self.field or self.field.same_as(other.field):
                return other.rep
            raise MixedField("operands live in different algebraic fields")
        if isinstance(other, (int, Rational)):
            return (Fraction(other),)
        return None

    def _new(self, rep) -> AlgebraicScalar:
        return AlgebraicScalar(self.field, rep)

    # -- ring operations ---------------------------------------------------
    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self._new(up.add(list(self.rep), list(o)))

    __radd__ = __add__

    def __neg__(self):
        return self._new([-c for c in self.rep])

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self._new(up.sub(list(self.rep), list(o)))

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self._new(up.sub(list(o), list(self.rep)))

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self._new(up.mul(list(self.rep), list(o)))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.invert() ** (-k)
        result, base = self._new([Fraction(1)]), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def invert(self) -> AlgebraicScalar:
        if self.is_zero():
            raise DivisionByZero("inverting zero in an algebraic field")
        modulus = self.field.defining
        if not self.field.minimal:
            g = up.gcd_poly(list(self.rep), modulus)
            if up.degree(g) > 0:
                # theta is not a root of g, so it is a root of the cofactor
                modulus, _ = up.divmod_poly(modulus, g)
        inv = _inverse_mod(list(self.rep), modulus)
        return self._new(inv)

    def __truediv__(self, other):
        if isinstance(other, AlgebraicScalar):
            self._lift(other)
            return self * other.invert()
        if isinstance(other, (int, Rational)):
            if other == 0:
                raise DivisionByZero("division by zero")
            return self._new([c / Fraction(other) for c in self.rep])
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (int, Rational)):
            return self.invert() * Fraction(other)
        return NotImplemented

    # -- exact decisions ---------------------------------------------------
    def is_zero(self) -> bool:
        if not self.rep:
            return True
        if self.field.minimal or len(self.rep) == 1:
            return False
        g = up.gcd_poly(list(self.rep), self.field.defining)
        if up.degree(g) <= 0:
            return False
        # the isolating interval holds exactly one root of the defining
        # polynomial, hence at most one of g; its endpoints are not roots
        iv = self.field.interval
        return up.sign_of(up.evaluate(g, iv.lo)) * up.sign_of(up.evaluate(g, iv.hi)) < 0

    def rational_value(self) -> Fraction | None:
        """The value as a Fraction when the residue is constant (or theta is rational)."""
        if len(self.rep) <= 1:
            return self.rep[0] if self.rep else Fraction(0)
        if self.field.degree == 1:
            return up.evaluate(list(self.rep), -self.field.defining[0])
        return None

    def sign(self) -> int:
        if self.is_zero():
            return 0
        width = max(self.field.interval.width, Fraction(1, 2**20))
        while True:
            iv = self.field.refine(width)
            lo, hi = interval_horner(self.rep, iv.lo, iv.hi)
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            width /= 16

    def enclosure(self, width=Fraction(1, 10**9)) -> Interval:
        """A rational interval of at most ``width`` containing the value."""
        width = Fraction(width)
        root_w = max(self.field.interval.width, Fraction(1, 2**20))
        while True:
            iv = self.field.refine(root_w)
            lo, hi = interval_horner(self.rep, iv.lo, iv.hi)
            if hi - lo <= width:
                return Interval(lo, hi)
            root_w /= 16

    def __float__(self):
        return float(self.enclosure(Fraction(1, 2**64)).mid)

    def _cmp(self, other) -> int:
        return (self - other).sign()

    def __eq__(self, other):
        try:
            return (self - other).is_zero()
        except (TypeError, MixedField):
            return NotImplemented

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __repr__(self):
        terms = " + ".join(f"{c}*t^{k}" if k else f"{c}" for k, c in enumerate(self.rep)) or "0"
        return f"AlgebraicScalar({terms} ~ {float(self):.12g})"


def _inverse_mod(a: list, m: list) -> list:
    """Inverse of ``a`` modulo ``m`` via the extended Euclidean algorithm."""
    r0, r1 = up.trim(m), up.trim(a)
    s0, s1 = [], [Fraction(1)]
    while up.degree(r1) > 0:
        q, r = up.divmod_poly(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, up.sub(s0, up.mul(q, s1))
    if not r1:
        raise DivisionByZero("element is not invertible modulo the defining polynomial")
    c = r1[0]
    _, rem = up.divmod_poly([x / c for x in s1], m)
    return rem


def from_root(defining, window, *, closed: bool = False):
    """The unique root of ``defining`` in ``window`` as a Fraction or generator of ``Q(root)``.

    Rational roots degrade to :class:`~fractions.Fraction`.  Raises
    ``ValueError`` unless exactly one distinct root lies in the window.
    """
    if hasattr(defining, "univariate_coeffs"):
        defining = defining.univariate_coeffs()
    if not isinstance(window, Interval):
        window = Interval(*window)
    roots = isolate_cubic_roots(defining, window, closed=closed)
    if len(roots) != 1:
        raise ValueError(f"expected exactly one root in {window}, found {len(roots)}")
    iv, _ = roots[0]
    return root_in(defining, iv)


def root_in(defining, iv: Interval):
    """Field generator for the root of ``defining`` isolated by ``iv`` (or a Fraction)."""
    if iv.is_point():
        return iv.lo
    poly = up.squarefree_part([Fraction(c) for c in defining])
    for r in up.rational_roots(poly):
        if iv.lo < r < iv.hi:
            return r
        poly, _ = up.divmod_poly(poly, [-r, Fraction(1)])
    field = AlgebraicField(poly, iv)
    return field.gen()


def same_field(a, b) -> bool:
    if not isinstance(a, AlgebraicScalar) or not isinstance(b, AlgebraicScalar):
        return True
    return a.field.same_as(b.field)


def affine_relation(src: AlgebraicField, dst: AlgebraicField):
    """Rationals ``(a, b)`` with ``theta_dst = a + b * theta_src``, or None.

    Both fields must have the same degree; the relation is checked exactly by
    evaluating in ``Q(theta_src)``, never assumed from numerics.
    """
    if src.degree != dst.degree:
        return None
    p, q = src.defining, dst.defining
    n = src.degree
    if n == 1:
        return (-q[0], Fraction(0))
    # depress both: theta = y - c_{n-1}/n
    ps, qs = -p[n - 1] / n, -q[n - 1] / n
    pd = up.compose_linear(p, ps, Fraction(1))
    qd = up.compose_linear(q, qs, Fraction(1))
    candidates = []
    if n == 2:
        # y^2 + P: need P_q = P_p * b^2
        if pd[0] == 0 or qd[0] == 0:
            return None
        ratio = qd[0] / pd[0]
        for b in _rational_sqrt_pm(ratio):
            candidates.append(b)
    else:
        P, Q = pd[1], pd[0]
        Pq, Qq = qd[1], qd[0]
        if Q != 0 and Qq != 0 and P != 0 and Pq != 0:
            candidates.append((Qq * P) / (Pq * Q))
        elif P == 0 and Pq == 0 and Q != 0 and Qq != 0:
            ratio = Qq / Q
            c = _rational_cbrt(ratio)
            if c is not None:
                candidates.append(c)
        elif Q == 0 and Qq == 0 and P != 0 and Pq != 0:
            candidates.extend(_rational_sqrt_pm(Pq / P))
    for b in candidates:
        if b == 0:
            continue
        # y_dst = b * y_src  =>  theta_dst = qs + b * (theta_src - ps)
        a = qs - b * ps
        mapped = up.compose_linear(q, a, b)  # q(a + b x)
        lead = mapped[-1]
        if [c / lead for c in mapped] != p:
            continue
        img = src.gen() * b + a
        iv = dst.interval
        if (img - iv.lo).sign() > 0 and (img - iv.hi).sign() < 0:
            return (a, b)
    return None


def _rational_sqrt_pm(x: Fraction) -> list[Fraction]:
    from math import isqrt

    if x <= 0:
        return []
    n, d = x.numerator, x.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn != n or rd * rd != d:
        return []
    r = Fraction(rn, rd)
    return [r, -r]


def _rational_cbrt(x: Fraction) -> Fraction | None:
    def icbrt(n: int) -> int | None:
        if n < 0:
            r = icbrt(-n)
            return None if r is None else -r
        r = round(n ** (1 / 3))
        for c in (r - 1, r, r + 1):
            if c**3 == n:
                return c
        return None

    rn, rd = icbrt(x.numerator), icbrt(x.denominator)
    if rn is None or rd is None:
        return None
    return Fraction(rn, rd)


def embed(x, field: AlgebraicField):
    """Express ``x`` (rational or algebraic) as an element of ``field``.

    Succeeds when ``x`` is rational, already lives in ``field``, or its field
    generator is an affine image of ``field``'s generator.  Raises
    :class:`MixedField` otherwise.
    """
    if isinstance(x, (int, Rational)):
        return field.element([Fraction(x)])
    if not isinstance(x, AlgebraicScalar):
        raise TypeError(f"cannot embed {type(x).__name__}")
    if x.field is field or x.field.same_as(field):
        return field.element(list(x.rep))
    rel = affine_relation(field, x.field)
    if rel is None:
        raise MixedField("no affine relation between the two fields' generators")
    a, b = rel
    image = field.gen() * b + a
    acc = field.element([])
    for c in reversed(x.rep):
        acc = acc * image + c
    return acc
