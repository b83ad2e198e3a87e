"""Sparse multivariate polynomials with rational coefficients.

A monomial is a tuple of ``(variable, exponent)`` pairs sorted in the canonical
variable order, so two polynomials are equal exactly when their term maps are
equal.  Coefficients are :class:`fractions.Fraction`; zero coefficients are
never stored.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping

Monomial = tuple  # tuple[tuple[str, int], ...]

# Lattice parameters first, then barycentric weights, then the scaffold variable.
_PREFERRED = ("alpha", "beta", "delta", "epsilon", "x", "y", "z", "lam")


def _var_key(name: str):
    try:
        return (0, _PREFERRED.index(name), name)
    except ValueError:
        return (1, 0, name)


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    exps = dict(a)
    for v, k in b:
        exps[v] = exps.get(v, 0) + k
    return tuple(sorted(exps.items(), key=lambda t: _var_key(t[0])))


class Polynomial:
    """Immutable polynomial over Q in named variables."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Fraction] | None = None):
        clean = {}
        if terms:
            for mono, c in terms.items():
                c = Fraction(c)
                if c:
                    clean[tuple(sorted(mono, key=lambda t: _var_key(t[0])))] = c
        self._terms = clean
        self._hash = None

    # -- constructors -------------------------------------------------------
    @classmethod
    def var(cls, name: str) -> Polynomial:
        return cls({((name, 1),): Fraction(1)})

    @classmethod
    def const(cls, value) -> Polynomial:
        return cls({(): Fraction(value)})

    @classmethod
    def coerce(cls, value) -> Polynomial:
        if isinstance(value, Polynomial):
            return value
        if isinstance(value, (int, Rational)):
            return cls.const(value)
        raise TypeError(f"cannot coerce {type(value).__name__} to Polynomial")

    @classmethod
    def from_coeffs(cls, coeffs: Iterable, name: str) -> Polynomial:
        """Univariate polynomial from coefficients in ascending degree."""
        terms = {}
        for k, c in enumerate(coeffs):
            terms[((name, k),) if k else ()] = Fraction(c)
        return cls(terms)

    # -- inspection ---------------------------------------------------------
    @property
    def terms(self) -> dict:
        return dict(self._terms)

    @property
    def variables(self) -> tuple[str, ...]:
        names = {v for mono in self._terms for v, _ in mono}
        return tuple(sorted(names, key=_var_key))

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(mono == () for mono in self._terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self._terms.get((), Fraction(0))

    def degree(self, name: str | None = None) -> int:
        """Total degree, or degree in ``name``; -1 for the zero polynomial."""
        if not self._terms:
            return -1
        if name is None:
            return max(sum(k for _, k in mono) for mono in self._terms)
        return max(dict(mono).get(name, 0) for mono in self._terms)

    def coeffs_in(self, name: str) -> list[Polynomial]:
        """Coefficients (ascending) of ``self`` viewed as a polynomial in ``name``."""
        buckets: dict[int, dict] = {}
        for mono, c in self._terms.items():
            exps = dict(mono)
            k = exps.pop(name, 0)
            buckets.setdefault(k, {})[tuple(exps.items())] = c
        if not buckets:
            return []
        return [Polynomial(buckets.get(k, {})) for k in range(max(buckets) + 1)]

    def univariate_coeffs(self, name: str | None = None) -> list[Fraction]:
        """Rational coefficients (ascending) of a polynomial in at most one variable."""
        names = self.variables
        if len(names) > 1 or (name is not None and names and names[0] != name):
            raise ValueError(f"not univariate in {name!r}: {self}")
        if not names:
            return [self.constant_value()] if self._terms else []
        return [c.constant_value() for c in self.coeffs_in(names[0])]

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, other):
        try:
            other = Polynomial.coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self._terms)
        for mono, c in other._terms.items():
            out[mono] = out.get(mono, 0) + c
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial({m: -c for m, c in self._terms.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        try:
            other = Polynomial.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return Polynomial.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Rational)):
            f = Fraction(other)
            return Polynomial({m: c * f for m, c in self._terms.items()})
        if not isinstance(other, Polynomial):
            return NotImplemented
        out: dict = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = _mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return Polynomial(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Rational)):
            if other == 0:
                raise ZeroDivisionError("polynomial division by zero")
            f = Fraction(other)
            return Polynomial({m: c / f for m, c in self._terms.items()})
        return NotImplemented

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result, base = Polynomial.const(1), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Rational)):
            other = Polynomial.const(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    # -- calculus / substitution -------------------------------------------
    def derivative(self, name: str) -> Polynomial:
        out = {}
        for mono, c in self._terms.items():
            exps = dict(mono)
            k = exps.get(name, 0)
            if k:
                if k == 1:
                    del exps[name]
                else:
                    exps[name] = k - 1
                out[tuple(exps.items())] = c * k
        return Polynomial(out)

    def subs(self, values: Mapping[str, object]):
        """Substitute ring elements for variables.

        Unmentioned variables stay symbolic.  The result is a plain scalar
        when every remaining monomial is constant and the substituted values
        are not polynomials.
        """
        acc = None
        for mono, c in self._terms.items():
            term = c
            rest = []
            for v, k in mono:
                if v in values:
                    term = term * values[v] ** k
                else:
                    rest.append((v, k))
            if rest:
                term = Polynomial({tuple(rest): 1}) * term
            acc = term if acc is None else acc + term
        if acc is None:
            return Fraction(0)
        if isinstance(acc, Polynomial) and acc.is_constant():
            return acc.constant_value()
        return acc

    def evaluate(self, values: Mapping[str, object]):
        missing = set(self.variables) - set(values)
        if missing:
            raise ValueError(f"missing values for {sorted(missing)}")
        return self.subs(values)

    # -- display ------------------------------------------------------------
    def _sort_key(self, mono):
        return (-sum(k for _, k in mono), [(_var_key(v), -k) for v, k in mono])

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for mono in sorted(self._terms, key=self._sort_key):
            c = self._terms[mono]
            body = "*".join(v if k == 1 else f"{v}^{k}" for v, k in mono)
            mag = abs(c)
            if body:
                txt = body if mag == 1 else f"{mag}*{body}"
            else:
                txt = str(mag)
            parts.append(("-" if c < 0 else "+", txt))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, txt in parts[1:]:
            out += f" {sign} {txt}"
        return out

    def __repr__(self):
        return f"Polynomial({self})"


def symbols(*names: str) -> tuple[Polynomial, ...]:
    return tuple(Polynomial.var(n) for n in names)


def det3(m):
    """Determinant of a 3x3 array over any commutative ring (cofactor expansion)."""
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


def poly_det3(m) -> Polynomial:
    """Exact determinant of a 3x3 array of polynomials (or rationals) as a Polynomial."""
    return Polynomial.coerce(det3([[Polynomial.coerce(x) for x in row] for row in m]))
