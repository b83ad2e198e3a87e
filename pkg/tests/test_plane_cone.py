from __future__ import annotations

from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from monoclinic.errors import DependentBasis, TraceMismatch
from monoclinic.plane_cone import EXAMPLE_PLANES, binary_cubic, classify_plane
from monoclinic.strain import SymStrain

from oracles import projective_root_count, strain_matrix

KIND_ROOTS = {"OneLine": 1, "TwoLines": 2, "ThreeLines": 3}

small = st.integers(min_value=-4, max_value=4).map(Fraction)


@st.composite
def trace_free(draw):
    a, b, c, d, e = (draw(small) for _ in range(5))
    return SymStrain(a, b, -a - b, c, d, e)


def independent(e1, e2) -> bool:
    return sp.Matrix([list(e1.entries), list(e2.entries)]).rank() == 2


@pytest.mark.parametrize("name", sorted(EXAMPLE_PLANES))
def test_example_planes(name):
    e1, e2, kind, form = EXAMPLE_PLANES[name]
    c = classify_plane(e1, e2)
    assert (c.kind, c.canonical_form) == (kind, form)
    if kind != "Plane":
        assert len(c.witnesses) == KIND_ROOTS[kind]


def test_two_lines_double_root_direction():
    e1, e2, _, _ = EXAMPLE_PLANES["two-lines"]
    c = classify_plane(e1, e2)
    mult = {(w.x, w.y): w.multiplicity for w in c.witnesses}
    assert mult == {(1, 0): 2, (0, 1): 1}


def test_triple_root_multiplicity():
    e1, e2, _, _ = EXAMPLE_PLANES["one-line-triple"]
    (w,) = classify_plane(e1, e2).witnesses
    assert w.multiplicity == 3


def test_binary_cubic_against_sympy():
    e1, e2, _, _ = EXAMPLE_PLANES["three-lines-shear"]
    x, y = sp.symbols("x y")
    ref = sp.Poly((x * strain_matrix(e1) + y * strain_matrix(e2)).det(), x, y)
    c3, c2, c1, c0 = binary_cubic(e1, e2)
    assert ref.coeff_monomial(x**3) == c3
    assert ref.coeff_monomial(x**2 * y) == c2
    assert ref.coeff_monomial(x * y**2) == c1
    assert ref.coeff_monomial(y**3) == c0


@given(trace_free(), trace_free())
@settings(max_examples=1000)
def test_root_count_matches_sturm(e1, e2):
    assume(independent(e1, e2))
    c = classify_plane(e1, e2)
    if c.kind == "Plane":
        assert all(x == 0 for x in binary_cubic(e1, e2))
        return
    assert projective_root_count(*c.coefficients) == KIND_ROOTS[c.kind]


@given(trace_free(), trace_free())
@settings(max_examples=200)
def test_witnesses_are_compatible(e1, e2):
    assume(independent(e1, e2))
    c = classify_plane(e1, e2)
    for w in c.witnesses:
        assert w.point(e1, e2).det() == 0


@given(trace_free(), trace_free(), st.tuples(small, small, small, small))
@settings(max_examples=100)
def test_kind_is_basis_invariant(e1, e2, m):
    a, b, cc, d = m
    assume(independent(e1, e2) and a * d - b * cc != 0)
    f1, f2 = e1 * a + e2 * b, e1 * cc + e2 * d
    assert classify_plane(e1, e2).kind == classify_plane(f1, f2).kind


def test_basis_errors():
    e1, e2, _, _ = EXAMPLE_PLANES["three-lines-diagonal"]
    with pytest.raises(DependentBasis):
        classify_plane(e1, e1 * 3)
    with pytest.raises(TraceMismatch):
        classify_plane(SymStrain.identity(), e2)
