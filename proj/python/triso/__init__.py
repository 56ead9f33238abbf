"""Real solutions with multiplicities of zero-dimensional triangular systems over Q."""

from dataclasses import dataclass
from fractions import Fraction

from . import _triso
from ._triso import Error, NotTriangular, ParseError, PositiveDimension, normalize

__all__ = [
    "Error",
    "NotTriangular",
    "ParseError",
    "PositiveDimension",
    "Solution",
    "Isolation",
    "isolate",
    "isolate_document",
    "verify",
    "normalize",
]


@dataclass(frozen=True)
class Solution:
    box: tuple  # ((lo, hi), ...) as Fractions
    multiplicity: int
    exponents: tuple
    branch: int

    def contains(self, point):
        return all(lo <= Fraction(x) <= hi for (lo, hi), x in zip(self.box, point))


@dataclass(frozen=True)
class Isolation:
    variables: tuple
    solutions: tuple
    branches: tuple  # each a tuple of rendered polynomials


def _precision(p):
    return str(Fraction(p))


def _wrap(raw):
    sols = tuple(
        Solution(
            box=tuple((Fraction(lo), Fraction(hi)) for lo, hi in s["box"]),
            multiplicity=s["multiplicity"],
            exponents=tuple(s["exponents"]),
            branch=s["branch"],
        )
        for s in raw["solutions"]
    )
    return Isolation(tuple(raw["variables"]), sols, tuple(tuple(b) for b in raw["branches"]))


def isolate(equations, variables, precision=Fraction(1, 64), threads=0):
    """Isolate the real solutions of f1(x1), f2(x1, x2), ... given as strings."""
    return _wrap(_triso.isolate(list(equations), list(variables), _precision(precision), threads))


def isolate_document(text, precision=Fraction(1, 64), threads=0):
    """Same as isolate, for the text format read by the command line tool."""
    return _wrap(_triso.isolate_document(text, _precision(precision), threads))


def verify(equations, variables, precision=Fraction(1, 64)):
    return _triso.verify(list(equations), list(variables), _precision(precision))
