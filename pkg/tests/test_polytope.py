from __future__ import annotations

from fractions import Fraction
from itertools import combinations

import numpy as np
import pytest
from scipy.spatial import ConvexHull

from monoclinic.errors import DegenerateParams, FlatPolytope
from monoclinic.polytope import (
    edge_facet_counts,
    edge_group_counts,
    edges,
    enumerate_facets,
    lamination_equals_convex,
    smallest_face,
    verify_facet,
)
from monoclinic.reference import facet_sets
from monoclinic.strain import SymStrain
from monoclinic.symmetry import s4
from monoclinic.variants import INDICES, LatticeParams, build_variants

FACETS_IA = {
    "FiveVertex": [
        [1, 2, 3, 7, 10], [1, 2, 4, 6, 11], [1, 3, 4, 5, 9], [1, 5, 7, 8, 9],
        [1, 5, 9, 11, 12], [2, 3, 4, 8, 12], [2, 5, 6, 8, 12], [2, 8, 9, 10, 12],
        [3, 5, 6, 7, 10], [3, 7, 10, 11, 12], [4, 6, 7, 8, 11], [4, 6, 9, 10, 11],
    ],
    "T3Pair": [[1, 2, 5, 6, 11, 12], [1, 2, 7, 8, 9, 10], [3, 4, 5, 6, 9, 10], [3, 4, 7, 8, 11, 12]],
    "CompatibleTriplePair": [
        [1, 2, 5, 8, 9, 12], [1, 3, 5, 7, 9, 10], [1, 4, 5, 6, 9, 11],
        [2, 3, 7, 8, 10, 12], [2, 4, 6, 8, 11, 12], [3, 4, 6, 7, 10, 11],
    ],
    "EightVertex": [[1, 2, 3, 4, 5, 6, 7, 8], [1, 2, 3, 4, 9, 10, 11, 12], [5, 6, 7, 8, 9, 10, 11, 12]],
}
FACETS_BOUNDARY = {
    "NineVertex": [
        [1, 2, 3, 5, 7, 8, 9, 10, 12], [1, 2, 4, 5, 6, 8, 9, 11, 12],
        [1, 3, 4, 5, 6, 7, 9, 10, 11], [2, 3, 4, 6, 7, 8, 10, 11, 12],
    ],
    "EightVertex": FACETS_IA["EightVertex"],
}
FACETS_IB = {
    "FiveVertex": [
        [1, 2, 3, 5, 12], [1, 2, 4, 8, 9], [1, 3, 4, 7, 11], [1, 5, 6, 7, 11],
        [1, 7, 9, 10, 11], [2, 3, 4, 6, 10], [2, 6, 7, 8, 10], [2, 6, 10, 11, 12],
        [3, 5, 7, 8, 12], [3, 5, 9, 10, 12], [4, 5, 6, 8, 9], [4, 8, 9, 11, 12],
    ],
    "FiveVertexB": [
        [1, 3, 5, 9, 12], [1, 3, 7, 10, 11], [1, 4, 5, 8, 9], [1, 4, 6, 7, 11],
        [1, 5, 7, 9, 11], [2, 3, 5, 8, 12], [2, 3, 6, 7, 10], [2, 4, 6, 10, 11],
        [2, 4, 8, 9, 12], [2, 6, 8, 10, 12], [3, 5, 7, 10, 12], [4, 6, 8, 9, 11],
    ],
    "CompatibleTriplePair": FACETS_IA["CompatibleTriplePair"],
    "EightVertex": FACETS_IA["EightVertex"],
}
LITERAL = {"Ia": FACETS_IA, "boundary": FACETS_BOUNDARY, "Ib": FACETS_IB}
WEIGHTS = np.array([1, 1, 1, 2, 2, 2], dtype=float)


@pytest.fixture(scope="module")
def reports(niti, boundary, ib):
    return {"Ia": enumerate_facets(niti), "boundary": enumerate_facets(boundary), "Ib": enumerate_facets(ib)}


@pytest.fixture(scope="module")
def variants(niti, boundary, ib):
    return {"Ia": niti, "boundary": boundary, "Ib": ib}


def as_sets(groups):
    return {g: {frozenset(f) for f in fs} for g, fs in groups.items()}


def qhull_facets(v) -> set[frozenset]:
    """Independent float oracle: qhull on coordinates of the trace hyperplane."""
    pts = np.array([[float(x) for x in v[i].entries] for i in INDICES]) * np.sqrt(WEIGHTS)
    centred = pts - pts.mean(axis=0)
    vt = np.linalg.svd(centred)[2]
    coords = centred @ vt[:5].T
    coords /= np.abs(coords).max()
    hull = ConvexHull(coords)
    # qhull triangulates; each supporting plane is recovered from its equation
    return {
        frozenset(int(i) + 1 for i in np.flatnonzero(np.abs(coords @ eq[:5] + eq[5]) < 1e-9))
        for eq in hull.equations
    }


@pytest.mark.parametrize("regime", ["Ia", "boundary", "Ib"])
def test_facets_match_literal_lists(reports, regime):
    got = {g: {f.vertices for f in fs} for g, fs in reports[regime].by_group().items()}
    assert got == as_sets(LITERAL[regime])
    assert as_sets(LITERAL[regime]) == facet_sets(regime)


def test_facet_counts(reports):
    assert [len(reports[r]) for r in ("Ia", "boundary", "Ib")] == [25, 7, 33]
    assert {g: len(fs) for g, fs in reports["Ia"].by_group().items()} == {
        "FiveVertex": 12, "T3Pair": 4, "CompatibleTriplePair": 6, "EightVertex": 3,
    }


@pytest.mark.parametrize("regime", ["Ia", "boundary", "Ib"])
def test_facets_complete_against_qhull(reports, variants, regime):
    assert qhull_facets(variants[regime]) == reports[regime].vertex_sets()


@pytest.mark.parametrize("regime", ["Ia", "boundary", "Ib"])
def test_certificates_and_symmetry(reports, variants, regime):
    rep = reports[regime]
    assert all(verify_facet(f, variants[regime]) for f in rep)
    sets = rep.vertex_sets()
    assert all(p.apply(s) in sets for p in s4() for s in sets)


def test_tampered_facet_fails_certificate(reports, niti):
    f = reports["Ia"].facets[0]
    bad = type(f)(f.vertices, f.normal * -1, -f.offset, f.group)
    assert not verify_facet(bad, niti)


def test_all_variants_are_vertices(reports):
    for rep in reports.values():
        for i in INDICES:
            assert smallest_face([i], rep.facets).is_vertex


def test_edges_are_compatible_pairs_off_boundary(reports, variants):
    for regime in ("Ia", "Ib"):
        v = variants[regime]
        e = edges(reports[regime].facets)
        assert len(e) == 66
        assert lamination_equals_convex(v, reports[regime].facets) is False
    assert len(edges(reports["boundary"].facets)) == 30
    assert lamination_equals_convex(variants["boundary"], reports["boundary"].facets) is True


def test_each_edge_lies_on_four_facets(reports):
    for regime in ("Ia", "Ib"):
        counts = edge_facet_counts(reports[regime].facets)
        assert min(counts.values()) >= 4


def test_incompatible_edges_meet_one_facet_per_group(reports, niti):
    facets = reports["Ia"].facets
    for i, j in combinations(INDICES, 2):
        if not niti.is_compatible(i, j):
            counts = edge_group_counts(facets, (i, j))
            assert all(c == 1 for c in counts.values()), (i, j, counts)


def test_smallest_face_of_non_edge(reports):
    res = smallest_face([1, 2, 3], reports["boundary"].facets)
    assert not res.is_edge and {1, 2, 3} <= res.smallest_face


def test_backends_agree(niti, ib):
    for v in (niti, ib):
        a = enumerate_facets(v, backend="python")
        try:
            b = enumerate_facets(v, backend="cython")
        except RuntimeError:
            pytest.skip("compiled kernel not built")
        assert a.facets == b.facets
        assert (a.backend, b.backend) == ("python", "cython")


def test_flat_and_degenerate_refused():
    flat = build_variants(LatticeParams.from_strings("0.05", "0.05", "0.03", "0.01"))
    with pytest.raises(FlatPolytope):
        enumerate_facets(flat)
    degenerate = build_variants(LatticeParams.from_strings("1/10", "1/40", "1/10", "1/20"))
    with pytest.raises(DegenerateParams):
        enumerate_facets(degenerate)
    assert lamination_equals_convex(degenerate) is True


def test_lamination_for_small_point_sets():
    a = SymStrain.diag(Fraction(1), Fraction(0), Fraction(-1))
    b = SymStrain.zero()
    c = SymStrain.diag(Fraction(2), Fraction(-1), Fraction(-1))
    assert lamination_equals_convex([a, b]) is True
    assert lamination_equals_convex([c, b]) is False
    with pytest.raises(ValueError):
        lamination_equals_convex([a, b, a * 2])
