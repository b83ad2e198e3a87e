from __future__ import annotations

from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from monoclinic.errors import DegreeTooHigh, DivisionByZero, MixedField
from monoclinic.exact import Interval, Polynomial, isolate_cubic_roots, parse_rational, poly_det3, refine, symbols
from monoclinic.exact.algebraic import embed, from_root
from monoclinic.exact.intervals import enclose, excludes_zero, idet
from monoclinic.exact import univariate as up

from oracles import to_sympy

small = st.fractions(min_value=-5, max_value=5, max_denominator=12)
coeff = st.integers(min_value=-20, max_value=20)


def test_parse_rational_is_exact():
    assert parse_rational("0.0427") == Fraction(427, 10000)
    assert parse_rational("-2/41") == Fraction(-2, 41)
    assert parse_rational("1e-3") == Fraction(1, 1000)
    with pytest.raises(TypeError):
        parse_rational(0.1)


@given(st.lists(st.lists(small, min_size=3, max_size=3), min_size=3, max_size=3))
def test_det3_of_rationals_matches_sympy(m):
    expected = sp.Matrix(m).det()
    assert to_sympy(poly_det3(m).constant_value()) == expected


def test_poly_det3_matches_sympy_symbolically():
    a, b, c = symbols("a", "b", "c")
    m = [[a, b, c], [b, a * c, 1], [c, 1, b - a]]
    sa, sb, sc = sp.symbols("a b c")
    ref = sp.Matrix([[sa, sb, sc], [sb, sa * sc, 1], [sc, 1, sb - sa]]).det()
    got = sp.sympify(str(poly_det3(m)).replace("^", "**"))
    assert sp.expand(got - ref) == 0


def test_polynomial_ring_identities():
    x, y = symbols("x", "y")
    p = (x + y) ** 3
    assert p == x**3 + 3 * x**2 * y + 3 * x * y**2 + y**3
    assert (p - p).is_zero()
    assert p.subs({"y": Fraction(1)}).univariate_coeffs("x") == [1, 3, 3, 1]
    assert p.derivative("x") == 3 * (x + y) ** 2


@given(st.lists(coeff, min_size=2, max_size=4).filter(lambda c: c[-1] != 0))
@settings(max_examples=200)
def test_root_isolation_matches_sympy(coeffs):
    x = sp.Symbol("x")
    poly = sp.Poly(list(reversed(coeffs)), x)
    with_mult = sp.real_roots(poly)  # repeated according to multiplicity
    roots = sorted(set(with_mult), key=lambda r: float(r))
    found = isolate_cubic_roots([Fraction(c) for c in coeffs], (-100, 100))
    assert len(found) == len(roots)
    for (iv, mult), r in zip(found, roots):
        assert iv.lo <= r <= iv.hi
        assert mult == with_mult.count(r)


def test_isolation_cases():
    lam = Polynomial.var("lam")
    assert [iv for iv, _ in isolate_cubic_roots(lam * (lam - 1), (-2, 2))] == [Interval(0, 0), Interval(1, 1)]
    (iv, mult), = isolate_cubic_roots((lam - 1) ** 3, (-2, 2))
    assert mult == 3 and iv.contains(1)
    assert isolate_cubic_roots(lam**2 - 2, (0, 1)) == []
    assert isolate_cubic_roots(lam * (lam - 1), (0, 1), closed=False) == []
    with pytest.raises(DegreeTooHigh):
        isolate_cubic_roots(lam**4 - 1, (-2, 2))


def test_refine_reaches_width():
    iv = isolate_cubic_roots([-2, 0, 0, 1], (0, 2))[0][0]
    tight = refine([-2, 0, 0, 1], iv, Fraction(1, 10**12))
    assert tight.width <= Fraction(1, 10**12)
    assert tight.lo**3 <= 2 <= tight.hi**3


def test_algebraic_arithmetic_cube_root_of_two():
    t = from_root([-2, 0, 0, 1], (1, 2))
    assert (t**3 - 2).is_zero()
    assert (t * t.invert() - 1).is_zero()
    assert (t - 1).sign() == 1 and (t - Fraction(13, 10)).sign() == -1
    assert abs(float(t) - 2 ** (1 / 3)) < 1e-12
    with pytest.raises(DivisionByZero):
        (t - t).invert()


@given(st.lists(small, min_size=3, max_size=3), st.lists(small, min_size=3, max_size=3))
@settings(max_examples=50)
def test_algebraic_field_ops_agree_with_floats(a, b):
    t = from_root([-2, 0, 0, 1], (1, 2))
    x = a[0] + a[1] * t + a[2] * t * t
    y = b[0] + b[1] * t + b[2] * t * t
    tf = 2 ** (1 / 3)
    xf, yf = (float(c[0] + c[1] * tf + c[2] * tf * tf) for c in (a, b))
    assert abs(float(x * y) - xf * yf) < 1e-9
    assert abs(float(x - y) - (xf - yf)) < 1e-9
    if not x.is_zero():
        assert abs(float(y / x) - yf / xf) < 1e-6 * max(1, abs(yf / xf))


def test_embedding_affine_related_fields():
    # lam' = 1 - lam relates the roots of p(x) and p(1 - x)
    p = [Fraction(c) for c in (1, -3, 0, 1)]  # x^3 - 3x + 1, three real roots
    a = from_root(p, (0, 1))
    q = up.compose_linear(p, Fraction(1), Fraction(-1))
    b = from_root(q, (0, 1))
    e = embed(b, a.field)
    assert (e - (1 - a)).is_zero()
    assert float(e) == pytest.approx(float(b))


def test_unrelated_fields_refuse_to_mix():
    a = from_root([-2, 0, 0, 1], (1, 2))
    b = from_root([-3, 0, 0, 1], (1, 2))
    with pytest.raises(MixedField):
        _ = a + b


def test_interval_determinant_encloses_exact():
    m = [[Fraction(1, 3), Fraction(2, 7), 1], [0, Fraction(5, 11), 2], [1, 1, Fraction(-1, 2)]]
    exact = poly_det3(m).constant_value()
    box = idet([[enclose(x, Fraction(1, 10**6)) for x in row] for row in m])
    assert box.lo <= exact <= box.hi
    assert excludes_zero(box)


def test_rational_roots_of_large_coefficients():
    # product of linear factors with large coprime coefficients
    p = up.mul(up.mul([-7, 123457], [11, -98765]), [1, 1])
    got = sorted(up.rational_roots([Fraction(c) for c in p]))
    assert got == sorted([Fraction(7, 123457), Fraction(11, 98765), Fraction(-1)])
