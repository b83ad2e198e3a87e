"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class MonoclinicError(Exception):
    """Base class for all errors raised by :mod:`monoclinic`."""


# exact arithmetic
class ZeroPolynomial(MonoclinicError, ValueError):
    pass


class DegreeTooHigh(MonoclinicError, ValueError):
    pass


class MixedField(MonoclinicError, ValueError):
    pass


class DivisionByZero(MonoclinicError, ZeroDivisionError):
    pass


# strains and variants
class TraceMismatch(MonoclinicError, ValueError):
    pass


class InvalidParams(MonoclinicError, ValueError):
    pass


class UnknownMaterial(MonoclinicError, KeyError):
    pass


class DegenerateParams(MonoclinicError, ValueError):
    """The lattice parameters make all twelve strains pairwise compatible."""


# symmetry / planes
class FamilyNotClosed(MonoclinicError, ValueError):
    pass


class DependentBasis(MonoclinicError, ValueError):
    pass


# T3 configurations
class NotT3(MonoclinicError, ValueError):
    pass


class MultipleRootsInUnitInterval(MonoclinicError, ArithmeticError):
    pass


class IncompatibleCenter(MonoclinicError, ValueError):
    pass


class DegenerateLambda(MonoclinicError, ValueError):
    pass


class DegenerateT3(MonoclinicError, ValueError):
    pass


class InsufficientSamples(MonoclinicError, RuntimeError):
    pass


# polytope
class FlatPolytope(MonoclinicError, ValueError):
    """The twelve strains span fewer than five affine dimensions (alpha == beta)."""
