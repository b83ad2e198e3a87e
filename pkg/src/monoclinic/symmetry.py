"""Index permutations of the twelve variants and the cube symmetry groups."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .errors import FamilyNotClosed, InvalidParams
from .exact.scalars import is_zero
from .linalg import is_consistent
from .rotations import ROTATIONS
from .strain import SymStrain
from .variants import INDICES, VariantSet, build_variants, symbolic_variants


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1..12}; ``images[i-1]`` is the image of i."""

    images: tuple

    def __post_init__(self):
        if sorted(self.images) != list(INDICES):
            raise ValueError(f"not a permutation of 1..12: {self.images}")

    @classmethod
    def identity(cls) -> Permutation:
        return cls(INDICES)

    @classmethod
    def from_pairs(cls, swaps) -> Permutation:
        img = list(INDICES)
        for a, b in swaps:
            img[a - 1], img[b - 1] = b, a
        return cls(tuple(img))

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        """Composition ``(self * other)(i) = self(other(i))``."""
        return Permutation(tuple(self(other(i)) for i in INDICES))

    def inverse(self) -> Permutation:
        inv = [0] * 12
        for i in INDICES:
            inv[self(i) - 1] = i
        return Permutation(tuple(inv))

    def apply(self, x):
        """Image of an index, tuple or set of indices."""
        if isinstance(x, int):
            return self(x)
        if isinstance(x, (set, frozenset)):
            return frozenset(self(i) for i in x)
        return tuple(self(i) for i in x)

    def is_identity(self) -> bool:
        return self.images == INDICES


@dataclass(frozen=True)
class PermGroup:
    elements: frozenset
    generators: tuple = ()

    @property
    def order(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(sorted(self.elements, key=lambda p: p.images))

    def __contains__(self, p) -> bool:
        return p in self.elements


def rotation_action(i: int, e: SymStrain) -> SymStrain:
    """``r_i e = R_i e R_i^T``."""
    return e.conjugate(ROTATIONS[i])


def permutation_of_map(fn, v: VariantSet | None = None) -> Permutation:
    """Index permutation induced by a strain map that permutes the variants."""
    v = v or symbolic_variants()
    images = []
    for i in INDICES:
        img = fn(v[i])
        hits = [j for j in INDICES if v[j] == img]
        if len(hits) != 1:
            raise ValueError(f"image of variant {i} is not a variant")
        images.append(hits[0])
    return Permutation(tuple(images))


@lru_cache(maxsize=None)
def rotation_permutation(i: int) -> Permutation:
    return permutation_of_map(lambda e: rotation_action(i, e))


R0 = Permutation.from_pairs([(1, 2), (3, 4), (5, 6), (7, 8), (9, 10), (11, 12)])


@lru_cache(maxsize=None)
def generators() -> dict[str, Permutation]:
    """Index permutations of r1, r2, r3 (derived from the rotations) and r0; treat as read-only."""
    gens = {f"r{i}": rotation_permutation(i) for i in ROTATIONS}
    gens["r0"] = R0
    return gens


def generate_group(gens, labels=()) -> PermGroup:
    """Closure of ``gens`` under composition, by breadth-first search."""
    gens = list(gens)
    ident = Permutation.identity()
    seen = {ident}
    queue = deque([ident])
    while queue:
        p = queue.popleft()
        for g in gens:
            q = g * p
            if q not in seen:
                seen.add(q)
                queue.append(q)
    return PermGroup(frozenset(seen), tuple(labels))


@lru_cache(maxsize=None)
def s4() -> PermGroup:
    g = generators()
    return generate_group([g["r1"], g["r2"], g["r3"]], ("r1", "r2", "r3"))


@lru_cache(maxsize=None)
def s4xc2() -> PermGroup:
    g = generators()
    return generate_group([g["r0"], g["r1"], g["r2"], g["r3"]], ("r0", "r1", "r2", "r3"))


def orbit(x, g: PermGroup) -> set:
    return {p.apply(x) for p in g.elements}


def orbits(items, g: PermGroup) -> list[frozenset]:
    """Partition of ``items`` (closed under g) into orbits, in first-seen order."""
    remaining = list(items)
    out = []
    seen = set()
    for x in remaining:
        if x in seen:
            continue
        o = frozenset(orbit(x, g))
        seen |= o
        out.append(o)
    return out


# -- symmetry predicates -----------------------------------------------------
def _pair_preserved(p: Permutation, v: VariantSet, i: int, j: int) -> bool:
    a, b = p(i), p(j)
    d1, d2 = v[i] - v[j], v[a] - v[b]
    if not is_zero(d1.norm_sq() - d2.norm_sq()):
        return False
    x, y = d1.det(), d2.det()
    return is_zero(x - y) or is_zero(x + y)


def _require_generic(v: VariantSet):
    if v.params.is_numeric and not v.params.is_generic:
        raise InvalidParams("symmetry predicates need generic lattice parameters")


def is_symmetry(p: Permutation, v: VariantSet) -> bool:
    """Distance and |det| preserved on every pair of variants.

    On symbolic parameters the comparisons are polynomial identities.
    """
    _require_generic(v)
    return all(_pair_preserved(p, v, i, j) for i, j in combinations(INDICES, 2))


def is_tuple_symmetry(p: Permutation, family, v: VariantSet) -> bool:
    """Like :func:`is_symmetry` but only within tuples of ``family``."""
    _require_generic(v)
    fam = {frozenset(t) for t in family}
    if any(p.apply(t) not in fam for t in fam):
        raise FamilyNotClosed("family is not mapped to itself by the permutation")
    for t in fam:
        for i, j in combinations(sorted(t), 2):
            if not _pair_preserved(p, v, i, j):
                return False
    return True


def compatible_pairs(v: VariantSet) -> set[frozenset]:
    return {frozenset(ij) for ij in combinations(INDICES, 2) if v.is_compatible(*ij)}


def incompatible_pairs(v: VariantSet) -> set[frozenset]:
    return {frozenset(ij) for ij in combinations(INDICES, 2) if not v.is_compatible(*ij)}


def incompatible_triples(v: VariantSet) -> set[frozenset]:
    return {
        frozenset(t)
        for t in combinations(INDICES, 3)
        if all(not v.is_compatible(a, b) for a, b in combinations(t, 2))
    }


def symbolic_status(p: Permutation) -> str:
    """``"symbolic-verified"`` if p is a symmetry as polynomial identities, else ``"fails"``."""
    return "symbolic-verified" if is_symmetry(p, symbolic_variants()) else "fails"


def r0_matches_epsilon_flip(v: VariantSet) -> bool:
    """Negating epsilon permutes the variants exactly as r0 does (after re-indexing)."""
    flipped = build_variants(v.params.negated_epsilon(), check=False)
    return all(flipped[i] == v[R0(i)] for i in INDICES)


def r0_is_linear(v: VariantSet) -> bool:
    """Whether some linear map L on Sym(3) satisfies L e(i) = e(r0 i) for all i.

    Decided by comparing rank(E) with rank([E | E'])  where the rows of E
    are the variants and those of E' their r0-images; L exists iff the
    augmented system is consistent.
    """
    a = [list(v[i].entries) for i in INDICES]
    b = [list(v[R0(i)].entries) for i in INDICES]
    return is_consistent(a, b)
