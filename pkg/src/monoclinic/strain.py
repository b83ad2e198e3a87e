"""Symmetric 3x3 strains over an exact scalar ring."""

from __future__ import annotations

from fractions import Fraction
from typing import Callable

from .errors import TraceMismatch
from .exact.polynomial import det3
from .exact.scalars import is_zero

# storage order of the six independent entries
COMPONENTS = ("11", "22", "33", "12", "13", "23")
_INDEX = {(0, 0): 0, (1, 1): 1, (2, 2): 2, (0, 1): 3, (1, 0): 3, (0, 2): 4, (2, 0): 4, (1, 2): 5, (2, 1): 5}


class SymStrain:
    """A symmetric matrix stored by its six independent entries.

    Entries may be Fractions, Polynomials or AlgebraicScalars; the class only
    uses ring operations, so the scalar tower is chosen by the caller.
    """

    __slots__ = ("entries",)
    __hash__ = None

    def __init__(self, e11, e22, e33, e12, e13, e23):
        self.entries = (e11, e22, e33, e12, e13, e23)

    @classmethod
    def from_matrix(cls, m) -> SymStrain:
        if any(not _equal(m[i][j], m[j][i]) for i in range(3) for j in range(i + 1, 3)):
            raise ValueError("matrix is not symmetric")
        return cls(m[0][0], m[1][1], m[2][2], m[0][1], m[0][2], m[1][2])

    @classmethod
    def from_entries(cls, entries) -> SymStrain:
        return cls(*entries)

    @classmethod
    def zero(cls) -> SymStrain:
        z = Fraction(0)
        return cls(z, z, z, z, z, z)

    @classmethod
    def identity(cls) -> SymStrain:
        z, o = Fraction(0), Fraction(1)
        return cls(o, o, o, z, z, z)

    @classmethod
    def diag(cls, a, b, c) -> SymStrain:
        z = Fraction(0)
        return cls(a, b, c, z, z, z)

    def __getitem__(self, ij):
        return self.entries[_INDEX[ij]]

    def matrix(self) -> list[list]:
        e11, e22, e33, e12, e13, e23 = self.entries
        return [[e11, e12, e13], [e12, e22, e23], [e13, e23, e33]]

    def map(self, fn: Callable) -> SymStrain:
        return SymStrain(*(fn(x) for x in self.entries))

    # -- vector space -------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, SymStrain):
            return NotImplemented
        return SymStrain(*(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other):
        if not isinstance(other, SymStrain):
            return NotImplemented
        return SymStrain(*(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self):
        return SymStrain(*(-a for a in self.entries))

    def __mul__(self, c):
        if isinstance(c, SymStrain):
            return NotImplemented
        return SymStrain(*(a * c for a in self.entries))

    def __rmul__(self, c):
        if isinstance(c, SymStrain):
            return NotImplemented
        return SymStrain(*(c * a for a in self.entries))

    def __truediv__(self, c):
        return SymStrain(*(a / c for a in self.entries))

    def __eq__(self, other):
        if not isinstance(other, SymStrain):
            return NotImplemented
        return all(_equal(a, b) for a, b in zip(self.entries, other.entries))

    def is_zero(self) -> bool:
        return all(is_zero(a) for a in self.entries)

    # -- invariants ---------------------------------------------------------
    def trace(self):
        return self.entries[0] + self.entries[1] + self.entries[2]

    def det(self):
        return det3(self.matrix())

    def cof(self) -> SymStrain:
        """Cofactor matrix; equals the adjugate for symmetric input."""
        m = self.matrix()
        c = [[None] * 3 for _ in range(3)]
        for i in range(3):
            for j in range(3):
                r = [k for k in range(3) if k != i]
                s = [k for k in range(3) if k != j]
                minor = m[r[0]][s[0]] * m[r[1]][s[1]] - m[r[0]][s[1]] * m[r[1]][s[0]]
                c[i][j] = minor if (i + j) % 2 == 0 else -minor
        return SymStrain.from_matrix(c)

    def inner(self, other: SymStrain):
        """Tr(e f) = sum of diagonal products + 2 * sum of off-diagonal products."""
        a, b = self.entries, other.entries
        return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + 2 * (a[3] * b[3] + a[4] * b[4] + a[5] * b[5])

    def norm_sq(self):
        return self.inner(self)

    def conjugate(self, rot) -> SymStrain:
        """``R e R^T`` for a 3x3 (integer) matrix ``R``."""
        m = self.matrix()
        rm = [[sum(rot[i][k] * m[k][j] for k in range(3)) for j in range(3)] for i in range(3)]
        out = [[sum(rm[i][k] * rot[j][k] for k in range(3)) for j in range(3)] for i in range(3)]
        return SymStrain.from_matrix(out)

    def __repr__(self):
        return "SymStrain(" + ", ".join(f"e{c}={x}" for c, x in zip(COMPONENTS, self.entries)) + ")"


def _equal(a, b) -> bool:
    return is_zero(a - b)


def matmul3(a, b):
    return [[sum(a[i][k] * b[k][j] for k in range(3)) for j in range(3)] for i in range(3)]


def det(e: SymStrain):
    return e.det()


def cof(e: SymStrain) -> SymStrain:
    return e.cof()


def inner(e: SymStrain, f: SymStrain):
    return e.inner(f)


def norm_sq(e: SymStrain):
    return e.norm_sq()


def is_compatible(e: SymStrain, f: SymStrain) -> bool:
    """``e`` and ``f`` differ by a symmetrised rank-one matrix.

    Only meaningful on a trace-constant slice, where compatibility is
    equivalent to ``det(e - f) == 0``; mismatched traces are refused.
    """
    if not _equal(e.trace(), f.trace()):
        raise TraceMismatch(f"traces differ: {e.trace()} vs {f.trace()}")
    return is_zero((e - f).det())
