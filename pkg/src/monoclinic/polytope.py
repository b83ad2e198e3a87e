"""Facets and faces of the convex hull of the twelve variants.

Facets are found by scanning all 5-subsets of vertices: a subset spanning a
4-dimensional affine space has a unique normal inside the trace-constant
hyperplane, and it supports a facet when every other vertex lies weakly on one
side.  Subsets sharing the same (oriented, primitive) normal are merged.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from itertools import combinations
from math import lcm

from . import kernels
from .errors import DegenerateParams, FlatPolytope
from .linalg import affine_dim
from .strain import SymStrain
from .symmetry import R0, incompatible_triples, orbits, s4
from .variants import INDICES, VariantSet

GROUPS = ("FiveVertex", "FiveVertexB", "T3Pair", "CompatibleTriplePair", "EightVertex", "NineVertex")
_WEIGHTS = (1, 1, 1, 2, 2, 2)


@dataclass(frozen=True)
class Facet:
    vertices: frozenset
    normal: SymStrain
    offset: Fraction
    group: str

    def sorted_vertices(self) -> list[int]:
        return sorted(self.vertices)


@dataclass(frozen=True)
class FacetReport:
    facets: tuple
    n_subsets: int
    n_independent: int
    n_supporting: int
    backend: str

    def __iter__(self):
        return iter(self.facets)

    def __len__(self):
        return len(self.facets)

    def vertex_sets(self) -> set[frozenset]:
        return {f.vertices for f in self.facets}

    def by_group(self) -> dict[str, list[Facet]]:
        out: dict[str, list[Facet]] = {}
        for f in self.facets:
            out.setdefault(f.group, []).append(f)
        return out


@dataclass(frozen=True)
class FaceQueryResult:
    inputs: frozenset
    smallest_face: frozenset
    is_vertex: bool
    is_edge: bool


def integer_points(v: VariantSet) -> list[list[int]]:
    """Variants as weighted integer vectors: ``<n, e> = n . p`` for a normal n."""
    den = reduce(lcm, (Fraction(x).denominator for i in INDICES for x in v[i].entries), 1)
    return [[int(w * x * den) for w, x in zip(_WEIGHTS, v[i].entries)] for i in INDICES]


class _UnionFind:
    def __init__(self):
        self.parent: dict = {}

    def find(self, x):
        self.parent.setdefault(x, x)
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def _label(vertices: frozenset, orbit: frozenset, triples: set) -> str:
    size = len(vertices)
    if size == 5:
        return "FiveVertexB" if all(R0.apply(f) in orbit for f in orbit) else "FiveVertex"
    if size == 6:
        return "T3Pair" if any(t <= vertices for t in triples) else "CompatibleTriplePair"
    if size == 8:
        return "EightVertex"
    if size == 9:
        return "NineVertex"
    return f"{size}Vertex"


def check_polytope(v: VariantSet):
    p = v.params
    if p.all_compatible:
        raise DegenerateParams("all variants are pairwise compatible")
    dim = affine_dim(v.points())
    if dim != 5:
        raise FlatPolytope(f"the variants span an affine space of dimension {dim}, not 5")


def enumerate_facets(v: VariantSet, *, backend: str | None = None) -> FacetReport:
    """All 4-dimensional facets with outward normals and orbit-group labels."""
    if not v.params.is_numeric:
        raise FlatPolytope("facet enumeration needs numeric lattice parameters")
    check_polytope(v)
    pts = integer_points(v)
    n_independent, hits = kernels.scan_facets(pts, backend=backend)

    # merge supporting subsets with equal canonical normals
    uf = _UnionFind()
    first: dict = {}
    for sub, normal, _mask in hits:
        uf.union(sub, first.setdefault(normal, sub))
    members: dict = {}
    for sub, normal, _mask in hits:
        root = uf.find(sub)
        verts, _ = members.setdefault(root, (set(), normal))
        verts.update(i + 1 for i in sub)

    triples = incompatible_triples(v)
    raw = []
    for verts, normal in members.values():
        n = SymStrain(*(Fraction(x) for x in normal))
        offsets = {n.inner(v[i]) for i in verts}
        if len(offsets) != 1:
            raise AssertionError("merged subsets are not coplanar")
        raw.append((frozenset(verts), n, offsets.pop()))
    g = s4()
    sets = [r[0] for r in raw]
    orbit_of = {x: o for o in orbits(sets, g) for x in o}
    if set(orbit_of) != set(sets):
        raise AssertionError("facet list is not invariant under the rotation group")
    facets = [Facet(vs, n, off, _label(vs, orbit_of[vs], triples)) for vs, n, off in raw]
    facets.sort(key=lambda f: (GROUPS.index(f.group) if f.group in GROUPS else 99, f.sorted_vertices()))
    backend_used = kernels.resolve_backend(pts, backend)
    return FacetReport(tuple(facets), 792, n_independent, len(hits), backend_used)


def verify_facet(f: Facet, v: VariantSet) -> bool:
    """Supporting-hyperplane certificate: equality on the facet, strict below elsewhere."""
    for i in INDICES:
        val = f.normal.inner(v[i])
        if i in f.vertices:
            if val != f.offset:
                return False
        elif not val < f.offset:
            return False
    return affine_dim(v.points(sorted(f.vertices))) == 4 and f.normal.trace() == 0


def smallest_face(indices, facets) -> FaceQueryResult:
    """Intersection of every facet containing ``indices`` (the whole set if none)."""
    s = frozenset(indices)
    face = frozenset(INDICES)
    for f in facets:
        if s <= f.vertices:
            face &= f.vertices
    return FaceQueryResult(s, face, len(s) == 1 and face == s, len(s) == 2 and face == s)


def edges(facets) -> set[frozenset]:
    return {frozenset(p) for p in combinations(INDICES, 2) if smallest_face(p, facets).is_edge}


def edge_facet_counts(facets) -> dict[tuple, int]:
    return {p: sum(1 for f in facets if set(p) <= f.vertices) for p in combinations(INDICES, 2)}


def edge_group_counts(facets, pair) -> dict[str, int]:
    """Number of facets of each group that contain ``pair``."""
    out: dict[str, int] = {}
    for f in facets:
        out.setdefault(f.group, 0)
        if set(pair) <= f.vertices:
            out[f.group] += 1
    return out


def lamination_equals_convex(points, facets=None) -> bool:
    """Whether every edge of the convex hull joins a compatible pair.

    ``points`` is a VariantSet (facets required unless all variants are
    pairwise compatible) or a list of strains in general position, where
    every pair is an edge.
    """
    if isinstance(points, VariantSet):
        v = points
        if v.params.all_compatible:
            return True
        if facets is None:
            facets = enumerate_facets(v)
        return all(v.is_compatible(*sorted(e)) for e in edges(facets))
    pts = list(points)
    if affine_dim(pts) != len(pts) - 1:
        raise ValueError("general point sets must be affinely independent")
    return all((a - b).det() == 0 for a, b in combinations(pts, 2))
