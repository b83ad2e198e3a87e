"""Exact Gaussian elimination over any field with an exact zero test."""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

from .exact.scalars import is_zero
from .strain import SymStrain


def row_echelon(rows: list[list]) -> tuple[list[list], list[int]]:
    """Reduced row echelon form and pivot columns; entries must support division."""
    m = [list(r) for r in rows]
    if not m:
        return m, []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if not is_zero(m[i][c])), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c] if isinstance(m[r][c], (int, Fraction)) else m[r][c].invert()
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and not is_zero(m[i][c]):
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def _fraction_free_rank(rows: list[list]) -> int:
    # elimination by cross-multiplication; valid over any integral domain
    m = [list(r) for r in rows]
    r = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if not is_zero(m[i][c])), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        piv = m[r][c]
        for i in range(r + 1, len(m)):
            if not is_zero(m[i][c]):
                f = m[i][c]
                m[i] = [piv * a - f * b for a, b in zip(m[i], m[r])]
        r += 1
    return r


def rank(rows: list[list]) -> int:
    if any(hasattr(x, "univariate_coeffs") for row in rows for x in row):
        return _fraction_free_rank(rows)
    return len(row_echelon(rows)[1])


def nullspace(rows: list[list], ncols: int | None = None) -> list[list]:
    """A basis of ``{x : rows @ x = 0}``."""
    if ncols is None:
        ncols = len(rows[0])
    red, pivots = row_echelon(rows) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for i, pc in enumerate(pivots):
            x[pc] = -red[i][f]
        basis.append(x)
    return basis


def is_consistent(a: list[list], b: list[list]) -> bool:
    """Whether ``A X = B`` is solvable, by comparing rank(A) with rank([A | B])."""
    aug = [list(ra) + list(rb) for ra, rb in zip(a, b)]
    return rank(a) == rank(aug)


def affine_dim(points: list[SymStrain]) -> int:
    """Dimension of the affine span of ``points`` (-1 for the empty set)."""
    if not points:
        return -1
    base = points[0]
    return rank([list((p - base).entries) for p in points[1:]]) if len(points) > 1 else 0


def primitive(vec: list[Fraction]) -> list[int]:
    """Scale a rational vector to coprime integers, keeping its direction."""
    den = lcm(*(Fraction(x).denominator for x in vec)) if vec else 1
    ints = [int(Fraction(x) * den) for x in vec]
    g = 0
    for x in ints:
        g = gcd(g, x)
    return [x // g for x in ints] if g else ints


class IncrementalRank:
    """Row space built one vector at a time; ``add`` reports whether the rank grew."""

    def __init__(self):
        self.rows: list[tuple[int, list]] = []  # (pivot column, row with unit pivot)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, vec) -> list:
        vec = list(vec)
        for pc, row in self.rows:
            f = vec[pc]
            if not is_zero(f):
                vec = [a - f * b for a, b in zip(vec, row)]
        return vec

    def add(self, vec) -> bool:
        vec = self.reduce(vec)
        pc = next((c for c, x in enumerate(vec) if not is_zero(x)), None)
        if pc is None:
            return False
        piv = vec[pc]
        inv = 1 / piv if isinstance(piv, (int, Fraction)) else piv.invert()
        vec = [x * inv for x in vec]
        self.rows = [(c, [a - r[pc] * b for a, b in zip(r, vec)]) for c, r in self.rows]
        self.rows.append((pc, vec))
        return True
