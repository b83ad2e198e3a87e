"""Compatible directions in a plane of trace-free strains.

For a plane spanned by ``e1``, ``e2`` the direction ``x e1 + y e2`` is
compatible with zero iff the binary cubic

    x^3 det(e1) + x^2 y <cof e1, e2> + x y^2 <e1, cof e2> + y^3 det(e2)

vanishes.  A nonzero real binary cubic has one, two or three distinct real
projective roots; an identically zero one means the whole plane is compatible.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Literal

from .errors import DependentBasis, TraceMismatch
from .exact import univariate as up
from .exact.algebraic import root_in
from .exact.roots import Interval, cauchy_bound, isolate_cubic_roots
from .exact.scalars import is_zero, sign
from .linalg import rank
from .strain import SymStrain

Kind = Literal["OneLine", "TwoLines", "ThreeLines", "Plane"]


@dataclass(frozen=True)
class Direction:
    """Projective direction ``x e1 + y e2``.

    ``x`` is a Fraction or an AlgebraicScalar (then ``y == 1`` and
    ``interval`` isolates the slope ``x / y``).
    """

    x: object
    y: object
    multiplicity: int = 1
    interval: Interval | None = None

    def point(self, e1: SymStrain, e2: SymStrain) -> SymStrain:
        return self.x * e1 + self.y * e2

    def __str__(self):
        if self.interval is not None:
            return f"(t:1), t in {self.interval}"
        return f"({self.x}:{self.y})"


@dataclass(frozen=True)
class PlaneClassification:
    kind: Kind
    canonical_form: str
    witnesses: tuple = field(default=())
    coefficients: tuple = ()
    discriminant: object = None


def binary_cubic(e1: SymStrain, e2: SymStrain) -> tuple:
    """Coefficients ``(c3, c2, c1, c0)`` of x^3, x^2 y, x y^2, y^3."""
    return (e1.det(), e1.cof().inner(e2), e1.inner(e2.cof()), e2.det())


def discriminant(c3, c2, c1, c0):
    return c2 * c2 * c1 * c1 - 4 * c3 * c1**3 - 4 * c2**3 * c0 - 27 * c3 * c3 * c0 * c0 + 18 * c3 * c2 * c1 * c0


def _hessian_vanishes(c3, c2, c1, c0) -> bool:
    # all three roots coincide iff the Hessian covariant is identically zero
    return all(is_zero(h) for h in (c2 * c2 - 3 * c3 * c1, c2 * c1 - 9 * c3 * c0, c1 * c1 - 3 * c2 * c0))


def projective_roots(c3, c2, c1, c0) -> list[Direction]:
    """Distinct real roots of the binary cubic as directions, with multiplicity.

    The root at infinity (1:0) is counted first when ``c3`` vanishes; the
    rest come from isolating the roots of ``c3 t^3 + c2 t^2 + c1 t + c0``
    in ``t = x / y``.
    """
    coeffs = up.trim([Fraction(c) for c in (c0, c1, c2, c3)])
    out: list[Direction] = []
    deg = len(coeffs) - 1
    if deg < 3:
        out.append(Direction(Fraction(1), Fraction(0), 3 - deg))
    if deg <= 0:
        return out
    bound = cauchy_bound(coeffs)
    for iv, mult in isolate_cubic_roots(coeffs, Interval(-bound, bound)):
        t = root_in(coeffs, iv)
        if isinstance(t, Fraction):
            out.append(Direction(t, Fraction(1), mult))
        else:
            out.append(Direction(t, Fraction(1), mult, iv))
    return out


def classify_plane(e1: SymStrain, e2: SymStrain) -> PlaneClassification:
    """Classify the compatible cone of span{e1, e2} (both trace-free)."""
    if not is_zero(e1.trace()) or not is_zero(e2.trace()):
        raise TraceMismatch("basis strains must be trace-free")
    if rank([list(e1.entries), list(e2.entries)]) < 2:
        raise DependentBasis("e1 and e2 do not span a plane")
    c = tuple(Fraction(x) for x in binary_cubic(e1, e2))
    if all(x == 0 for x in c):
        return PlaneClassification("Plane", "0", (), c, Fraction(0))
    disc = discriminant(*c)
    s = sign(disc)
    if s > 0:
        kind, form = "ThreeLines", "xy(x+y)"
    elif s < 0:
        kind, form = "OneLine", "x(x^2+y^2)"
    elif _hessian_vanishes(*c):
        kind, form = "OneLine", "x^3"
    else:
        kind, form = "TwoLines", "xy^2"
    roots = projective_roots(*c)
    expected = {"OneLine": 1, "TwoLines": 2, "ThreeLines": 3}[kind]
    if len(roots) != expected:
        raise AssertionError(f"discriminant says {kind} but isolation found {len(roots)} roots")
    return PlaneClassification(kind, form, tuple(roots), c, disc)


def root_count_by_isolation(e1: SymStrain, e2: SymStrain) -> int:
    return len(projective_roots(*binary_cubic(e1, e2)))


def _s(*entries) -> SymStrain:
    return SymStrain(*(Fraction(x) for x in entries))


# Reference planes (x e1 + y e2), one or two per kind, with expected kind and form.
EXAMPLE_PLANES = {
    "one-line-simple": (_s(1, 1, -2, 0, 0, 0), _s(0, 0, 0, 0, 0, 1), "OneLine", "x(x^2+y^2)"),
    "one-line-triple": (_s(0, 0, 0, 1, 1, 1), _s(1, -1, 0, 0, 0, 0), "OneLine", "x^3"),
    "two-lines": (_s(1, -1, 0, 0, 0, 0), _s(0, 0, 0, 0, 0, 1), "TwoLines", "xy^2"),
    "three-lines-diagonal": (_s(1, 0, -1, 0, 0, 0), _s(0, 1, -1, 0, 0, 0), "ThreeLines", "xy(x+y)"),
    "three-lines-shear": (_s(-2, 1, 1, 0, 0, 0), _s(0, 0, 0, 0, 0, 1), "ThreeLines", "xy(x+y)"),
    "plane-diagonal": (_s(0, 1, -1, 0, 0, 0), _s(0, 0, 0, 0, 0, 1), "Plane", "0"),
    "plane-shear": (_s(0, 0, 0, 1, 0, 0), _s(0, 0, 0, 0, 1, 0), "Plane", "0"),
}
