"""Exact integer/rational helpers and the solution record.

Rationals are ``fractions.Fraction``; integers are plain ``int``.  Nothing
here touches floating point.
"""
from __future__ import annotations

import operator
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt, lcm
from numbers import Rational

from .errors import NotASquare

__all__ = [
    "Quadruple",
    "verify",
    "normalize_quadruple",
    "int_sqrt_exact",
    "rat_sqrt_exact",
    "scale_transform",
    "is_reduced",
]


def verify(n: int, x: int, y: int, z: int, w: int) -> bool:
    """True iff n*(x^4 + y^4) == z^4 + w^4 exactly."""
    return n * (x**4 + y**4) == z**4 + w**4


def is_reduced(v: Fraction) -> bool:
    return v.denominator > 0 and gcd(v.numerator, v.denominator) == 1


@dataclass(frozen=True, order=True)
class Quadruple:
    """A primitive nonnegative solution of n(x^4+y^4) = z^4+w^4."""

    n: int
    x: int
    y: int
    z: int
    w: int

    def __post_init__(self):
        for name in ("n", "x", "y", "z", "w"):
            object.__setattr__(self, name, operator.index(getattr(self, name)))
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        if min(self.x, self.y, self.z, self.w) < 0:
            raise ValueError("coordinates must be nonnegative")
        if self.x == 0 and self.y == 0:
            raise ValueError("x and y are both zero")
        if gcd(self.x, self.y, self.z, self.w) != 1:
            raise ValueError("quadruple is not primitive")
        if not verify(self.n, self.x, self.y, self.z, self.w):
            raise ValueError(f"{self} does not satisfy n(x^4+y^4) = z^4+w^4")

    @property
    def degenerate(self) -> bool:
        return 0 in (self.x, self.y, self.z, self.w)

    @property
    def s(self) -> int:
        return self.z**4 + self.w**4

    def coords(self) -> tuple[int, int, int, int]:
        return (self.x, self.y, self.z, self.w)

    def canonical(self) -> tuple[int, int, int, int, int]:
        """Key that ignores the order inside each pair."""
        return (self.n, *sorted((self.x, self.y)), *sorted((self.z, self.w)))


def normalize_quadruple(n: int, x, y, z, w) -> Quadruple:
    """Clear denominators, divide out the gcd and drop signs.

    Accepts ints or rationals. Raises ``ValueError`` if the equation does not
    hold over the rationals.
    """
    vals = [Fraction(v) for v in (x, y, z, w)]
    if n * (vals[0] ** 4 + vals[1] ** 4) != vals[2] ** 4 + vals[3] ** 4:
        raise ValueError(f"({x}, {y}, {z}, {w}) is not a rational solution for n={n}")
    den = lcm(*(v.denominator for v in vals))
    ints = [abs(v.numerator * (den // v.denominator)) for v in vals]
    g = gcd(*ints)
    if g == 0:
        raise ValueError("all-zero solution cannot be normalized")
    return Quadruple(n, *(v // g for v in ints))


def int_sqrt_exact(v: int) -> int:
    """Return s with s*s == v, or raise NotASquare."""
    if v < 0:
        raise ValueError(f"negative input {v}")
    s = isqrt(v)
    if s * s != v:
        raise NotASquare(v)
    return s


def rat_sqrt_exact(v) -> Fraction:
    if not isinstance(v, Rational):
        raise TypeError(f"expected a rational, got {type(v).__name__}")
    v = Fraction(v)
    if v < 0:
        raise ValueError(f"negative input {v}")
    try:
        return Fraction(int_sqrt_exact(v.numerator), int_sqrt_exact(v.denominator))
    except NotASquare:
        raise NotASquare(v) from None


def scale_transform(q: Quadruple) -> Quadruple:
    """Reread n(x^4+y^4) = z^4+w^4 as (nx)^4 + (ny)^4 = n^3 (z^4+w^4).

    The result is the (normalized) solution for multiplier n^3 with
    coordinates (z, w, nx, ny); e.g. 2(7^4+20^4) = 21^4+19^4 becomes
    8(21^4+19^4) = 14^4+40^4.
    """
    n = q.n
    X, Y = n * q.x, n * q.y
    if X**4 + Y**4 != n**3 * (q.z**4 + q.w**4):
        raise AssertionError(f"scaling identity failed for {q}")
    return normalize_quadruple(n**3, q.z, q.w, X, Y)
