"""The twelve monoclinic-I transformation strains and their pairwise tables."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from itertools import combinations

from .errors import InvalidParams, UnknownMaterial
from .exact.polynomial import Polynomial
from .exact.scalars import is_zero, parse_rational, sign
from .rotations import ROTATIONS
from .strain import SymStrain, is_compatible

INDICES = tuple(range(1, 13))

# Table of variants as (e11, e22, e33, e12, e13, e23) templates over the
# symbols a=alpha, b=beta, d=delta, e=epsilon with signs.
_TEMPLATES = {
    1: ("a", "a", "b", "d", "e", "e"),
    2: ("a", "a", "b", "d", "-e", "-e"),
    3: ("a", "a", "b", "-d", "-e", "e"),
    4: ("a", "a", "b", "-d", "e", "-e"),
    5: ("a", "b", "a", "e", "d", "e"),
    6: ("a", "b", "a", "-e", "d", "-e"),
    7: ("a", "b", "a", "-e", "-d", "e"),
    8: ("a", "b", "a", "e", "-d", "-e"),
    9: ("b", "a", "a", "e", "e", "d"),
    10: ("b", "a", "a", "-e", "-e", "d"),
    11: ("b", "a", "a", "-e", "e", "-d"),
    12: ("b", "a", "a", "e", "-e", "-d"),
}


@dataclass(frozen=True)
class LatticeParams:
    """Lattice parameters; each is a Fraction or a Polynomial indeterminate."""

    alpha: object
    beta: object
    delta: object
    epsilon: object
    name: str | None = None

    @classmethod
    def symbolic(cls) -> LatticeParams:
        a, b, d, e = (Polynomial.var(n) for n in ("alpha", "beta", "delta", "epsilon"))
        return cls(a, b, d, e, name="symbolic")

    @classmethod
    def from_strings(cls, alpha, beta, delta, epsilon, name=None) -> LatticeParams:
        return cls(*(parse_rational(v) for v in (alpha, beta, delta, epsilon)), name=name)

    @property
    def is_numeric(self) -> bool:
        return all(isinstance(v, (int, Fraction)) for v in self.as_tuple())

    def as_tuple(self) -> tuple:
        return (self.alpha, self.beta, self.delta, self.epsilon)

    def as_dict(self) -> dict:
        return {"alpha": self.alpha, "beta": self.beta, "delta": self.delta, "epsilon": self.epsilon}

    @property
    def degeneracy(self):
        """(alpha - beta) delta + epsilon^2 - delta^2."""
        a, b, d, e = self.as_tuple()
        return (a - b) * d + e * e - d * d

    @property
    def all_compatible(self) -> bool:
        return self.is_numeric and self.degeneracy == 0

    @property
    def flat_polytope(self) -> bool:
        return self.is_numeric and self.alpha == self.beta

    @property
    def regime(self) -> str | None:
        """``"Ia"`` (eps < delta), ``"boundary"`` (eps == delta), ``"Ib"``; None when symbolic."""
        if not self.is_numeric:
            return None
        if self.epsilon < self.delta:
            return "Ia"
        if self.epsilon == self.delta:
            return "boundary"
        return "Ib"

    @property
    def is_generic(self) -> bool:
        return not self.is_numeric or not (self.all_compatible or self.flat_polytope)

    def negated_epsilon(self) -> LatticeParams:
        return LatticeParams(self.alpha, self.beta, self.delta, -self.epsilon, name=None)


@dataclass(frozen=True)
class VariantSet:
    params: LatticeParams
    strains: dict = field(repr=False)

    def __getitem__(self, i: int) -> SymStrain:
        return self.strains[i]

    def __iter__(self):
        return iter(INDICES)

    @property
    def trace(self):
        a, b = self.params.alpha, self.params.beta
        return 2 * a + b

    def points(self, indices=INDICES) -> list[SymStrain]:
        return [self.strains[i] for i in indices]

    def det_diff(self, i: int, j: int):
        """det(e(i) - e(j))."""
        return (self.strains[i] - self.strains[j]).det()

    def is_compatible(self, i: int, j: int) -> bool:
        return is_compatible(self.strains[i], self.strains[j])

    def incompatible_partners(self, i: int) -> set[int]:
        return {j for j in INDICES if j != i and not self.is_compatible(i, j)}


def _entry(token: str, values: dict):
    neg = token.startswith("-")
    v = values[token.lstrip("-")]
    return -v if neg else v


def build_variants(params: LatticeParams, *, check: bool = True) -> VariantSet:
    """The twelve transformation strains for the given lattice parameters."""
    if check and params.is_numeric and (params.epsilon <= 0 or params.delta <= 0):
        raise InvalidParams("numeric lattice parameters need epsilon > 0 and delta > 0")
    values = {"a": params.alpha, "b": params.beta, "d": params.delta, "e": params.epsilon}
    strains = {i: SymStrain(*(_entry(t, values) for t in tpl)) for i, tpl in _TEMPLATES.items()}
    return VariantSet(params, strains)


@lru_cache(maxsize=None)
def symbolic_variants() -> VariantSet:
    return build_variants(LatticeParams.symbolic())


# -- materials registry -------------------------------------------------------
@lru_cache(maxsize=None)
def _registry() -> dict:
    text = resources.files("monoclinic.data").joinpath("materials.json").read_text()
    return json.loads(text)


def registry_version() -> int:
    return _registry()["version"]


def material_names() -> list[str]:
    return list(_registry()["materials"])


def material(name: str) -> LatticeParams:
    table = _registry()["materials"]
    key = next((k for k in table if k.lower() == name.lower()), None)
    if key is None:
        raise UnknownMaterial(f"unknown material {name!r}; known: {', '.join(table)}")
    row = table[key]
    return LatticeParams.from_strings(row["alpha"], row["beta"], row["delta"], row["epsilon"], name=key)


# -- compatibility ------------------------------------------------------------
@dataclass(frozen=True)
class CompatRow:
    zero: frozenset
    plus: frozenset
    minus: frozenset


@dataclass(frozen=True)
class CompatibilityTable:
    """Rows ``i -> CompatRow``.

    ``plus`` holds the j with det(e(j) - e(i)) = +4 eps D and ``minus`` those
    with -4 eps D, D being the degeneracy quantity; this split does not depend
    on the parameter values.  ``degenerate`` is set when D = 0.
    """

    rows: dict
    values: dict
    degenerate: bool

    def __getitem__(self, i: int) -> CompatRow:
        return self.rows[i]


def compatibility_table(v: VariantSet) -> CompatibilityTable:
    p = v.params
    unit = 4 * p.epsilon * p.degeneracy
    degenerate = p.is_numeric and unit == 0
    rows, values = {}, {}
    for i in INDICES:
        zero, plus, minus = set(), set(), set()
        for j in INDICES:
            if j == i:
                continue
            d = v.det_diff(j, i)
            values[(j, i)] = d
            if is_zero(d):
                zero.add(j)
            elif is_zero(d - unit):
                plus.add(j)
            elif is_zero(d + unit):
                minus.add(j)
            else:
                raise AssertionError(f"det(e({j}) - e({i})) = {d} is not 0 or +-4 eps D")
        rows[i] = CompatRow(frozenset(zero), frozenset(plus), frozenset(minus))
    return CompatibilityTable(rows, values, degenerate)


# -- distances ----------------------------------------------------------------
DISTANCE_CLASSES = (
    "16eps^2",
    "8(delta^2+eps^2)",
    "2(alpha-beta)^2+4(delta-eps)^2",
    "2(alpha-beta)^2+4(delta+eps)^2",
    "2(alpha-beta)^2+4delta^2+12eps^2",
)
INCOMPATIBLE_CLASS = DISTANCE_CLASSES[4]


def distance_class_values(params: LatticeParams) -> dict:
    a, b, d, e = params.as_tuple()
    ab2 = 2 * (a - b) * (a - b)
    return {
        DISTANCE_CLASSES[0]: 16 * e * e,
        DISTANCE_CLASSES[1]: 8 * (d * d + e * e),
        DISTANCE_CLASSES[2]: ab2 + 4 * (d - e) * (d - e),
        DISTANCE_CLASSES[3]: ab2 + 4 * (d + e) * (d + e),
        DISTANCE_CLASSES[4]: ab2 + 4 * d * d + 12 * e * e,
    }


@lru_cache(maxsize=None)
def _symbolic_distance_labels() -> dict:
    sv = symbolic_variants()
    classes = distance_class_values(sv.params)
    labels = {}
    for i, j in combinations(INDICES, 2):
        d2 = (sv[i] - sv[j]).norm_sq()
        hits = [k for k, val in classes.items() if d2 == val]
        if len(hits) != 1:
            raise AssertionError(f"pair ({i},{j}) matches {hits}")
        labels[(i, j)] = hits[0]
    return labels


@dataclass(frozen=True)
class DistanceEntry:
    label: str
    value: object


def distance_table(v: VariantSet) -> dict:
    """``(i, j) -> DistanceEntry`` for i < j.

    The class label is fixed by the index pair (it is a polynomial identity);
    the value is evaluated in the ring of ``v`` and checked against the
    class formula.
    """
    labels = _symbolic_distance_labels()
    classes = distance_class_values(v.params)
    out = {}
    for (i, j), label in labels.items():
        value = (v[i] - v[j]).norm_sq()
        if not is_zero(value - classes[label]):
            raise AssertionError(f"distance ({i},{j}) disagrees with class {label}")
        out[(i, j)] = DistanceEntry(label, value)
    return out


# -- linear functionals -------------------------------------------------------
@dataclass(frozen=True)
class LinearFunctional:
    """``e -> sum(coeffs[k] * e_k)`` over the stored entries (11, 22, 33, 12, 13, 23)."""

    name: str
    coeffs: tuple

    def __call__(self, e: SymStrain):
        return sum((c * x for c, x in zip(self.coeffs, e.entries) if c), Fraction(0))

    def compose_rotation(self, rot, name: str) -> LinearFunctional:
        # H(R e R^T) is linear in e: read off coefficients on the unit basis
        coeffs = []
        for k in range(6):
            unit = [Fraction(0)] * 6
            unit[k] = Fraction(1)
            coeffs.append(self(SymStrain(*unit).conjugate(rot)))
        return LinearFunctional(name, tuple(coeffs))


H0 = LinearFunctional("H0", (0, 0, 0, -1, -1, -1))


def functionals() -> dict[str, LinearFunctional]:
    out = {"H0": H0}
    for i, rot in ROTATIONS.items():
        out[f"H{i}"] = H0.compose_rotation(rot, f"H{i}")
    for k, comp in enumerate(("11", "22", "33", "12", "13", "23")):
        coeffs = [0] * 6
        coeffs[k] = 1
        out[f"H{comp}"] = LinearFunctional(f"H{comp}", tuple(coeffs))
    return out


def functional_extremisers(v: VariantSet, h: LinearFunctional) -> tuple[frozenset, frozenset]:
    """Index sets of exact minimisers and maximisers of ``i -> h(e(i))``."""
    if not v.params.is_numeric:
        raise InvalidParams("extremisers need numeric lattice parameters")
    vals = {i: h(v[i]) for i in INDICES}
    lo, hi = min(vals.values()), max(vals.values())
    return (
        frozenset(i for i, x in vals.items() if x == lo),
        frozenset(i for i, x in vals.items() if x == hi),
    )


def pair_sign(v: VariantSet, i: int, j: int) -> int:
    return sign(v.det_diff(i, j))
