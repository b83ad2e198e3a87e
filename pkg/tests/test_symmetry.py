from __future__ import annotations

from itertools import combinations

import pytest
import sympy as sp
from hypothesis import given
from hypothesis import strategies as st

from monoclinic.errors import FamilyNotClosed, InvalidParams
from monoclinic.reference import reference
from monoclinic.rotations import ROTATIONS
from monoclinic.symmetry import (
    R0,
    Permutation,
    compatible_pairs,
    generators,
    incompatible_pairs,
    incompatible_triples,
    is_symmetry,
    is_tuple_symmetry,
    orbits,
    r0_is_linear,
    r0_matches_epsilon_flip,
    s4,
    s4xc2,
    symbolic_status,
)
from monoclinic.variants import INDICES, LatticeParams, build_variants, symbolic_variants

from oracles import strain_matrix, variant_matrices

perms = st.permutations(list(INDICES)).map(lambda p: Permutation(tuple(p)))


def test_group_orders():
    assert s4().order == 24
    assert s4xc2().order == 48
    assert all(p in s4xc2() for p in s4())
    assert R0 not in s4()


def test_generator_images_match_reference():
    ref = reference()["generator_images"]
    for name in ("r1", "r2", "r3"):
        assert list(generators()[name].images) == ref[name]


def test_generator_images_against_sympy_conjugation():
    ref = variant_matrices()
    for name, r in ROTATIONS.items():
        rot = sp.Matrix(r)
        p = generators()[f"r{name}"]
        for i in INDICES:
            assert sp.expand(rot * ref[i] * rot.T - ref[p(i)]) == sp.zeros(3, 3)


def test_rotations_are_proper():
    for r in ROTATIONS.values():
        m = sp.Matrix(r)
        assert m * m.T == sp.eye(3) and m.det() == 1


def test_rotations_are_symbolic_symmetries():
    for name in ("r1", "r2", "r3"):
        assert symbolic_status(generators()[name]) == "symbolic-verified"
    assert symbolic_status(R0) == "fails"


def test_orbit_sizes(sym):
    pairs = [frozenset(ij) for ij in combinations(INDICES, 2)]
    assert len(orbits([frozenset({1, 6})], s4())[0]) == 24
    assert len(orbits([frozenset({1, 6, 12})], s4())[0]) == 8
    comp = compatible_pairs(sym)
    assert len(comp) == 42
    assert len(orbits(sorted(comp, key=sorted), s4())) == 4
    assert sum(len(o) for o in orbits(pairs, s4())) == 66


def test_incompatible_families(sym):
    assert len(incompatible_pairs(sym)) == 24
    triples = incompatible_triples(sym)
    assert len(triples) == 8
    assert len(orbits(sorted(triples, key=sorted), s4())) == 1


def test_r0_claims(sym, niti):
    assert not is_symmetry(R0, niti)
    assert not is_tuple_symmetry(R0, compatible_pairs(niti), niti)
    assert is_tuple_symmetry(R0, incompatible_pairs(niti), niti)
    assert is_tuple_symmetry(R0, incompatible_triples(niti), niti)
    assert r0_matches_epsilon_flip(sym)
    assert not r0_is_linear(niti)


def test_family_must_be_closed(niti):
    with pytest.raises(FamilyNotClosed):
        is_tuple_symmetry(generators()["r1"], [{1, 2}], niti)


def test_non_generic_params_refused():
    flat = build_variants(LatticeParams.from_strings("0.05", "0.05", "0.03", "0.01"))
    with pytest.raises(InvalidParams):
        is_symmetry(R0, flat)


@given(perms, perms, perms)
def test_permutation_group_laws(p, q, r):
    e = Permutation.identity()
    assert (p * q) * r == p * (q * r)
    assert p * e == p == e * p
    assert (p * p.inverse()).is_identity()
    assert p.apply(frozenset({1, 2})) == frozenset({p(1), p(2)})


@given(perms)
def test_symmetry_check_against_sympy_distances(p):
    # oracle: a permutation is a symmetry iff it preserves |e_i - e_j|^2 and |det(e_i - e_j)|
    ref = variant_matrices()
    expected = True
    for i, j in combinations(INDICES, 2):
        d1, d2 = ref[i] - ref[j], ref[p(i)] - ref[p(j)]
        if sp.expand((d1 * d1).trace() - (d2 * d2).trace()) != 0:
            expected = False
            break
        x, y = d1.det(), d2.det()
        if sp.expand(x - y) != 0 and sp.expand(x + y) != 0:
            expected = False
            break
    assert is_symmetry(p, symbolic_variants()) == expected


def test_every_group_element_is_symmetry(sym):
    for p in s4():
        assert is_symmetry(p, sym)
