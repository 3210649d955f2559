"""Long Weierstrass curves over Q and their chord-tangent group law.

    Y^2 + a1 XY + a3 Y = X^3 + a2 X^2 + a4 X + a6

Points are ``Point(X, Y)`` with Fraction coordinates, or ``INFINITY``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Union

__all__ = ["Point", "INFINITY", "WeierstrassCurve"]

# Rational torsion has order <= 12 (Mazur), so checking 1..12 is exhaustive.
MAZUR_BOUND = 12


class _Infinity:
    __slots__ = ()

    def __repr__(self):
        return "INFINITY"

    def __reduce__(self):
        return "INFINITY"


INFINITY = _Infinity()


class Point(NamedTuple):
    X: Fraction
    Y: Fraction


ECPoint = Union[Point, _Infinity]


def point(X, Y) -> Point:
    return Point(Fraction(X), Fraction(Y))


@dataclass(frozen=True)
class WeierstrassCurve:
    a1: Fraction
    a2: Fraction
    a3: Fraction
    a4: Fraction
    a6: Fraction

    def __post_init__(self):
        for name in ("a1", "a2", "a3", "a4", "a6"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.discriminant == 0:
            raise ValueError(f"singular curve {self}")

    @property
    def b_invariants(self):
        a1, a2, a3, a4, a6 = self.a1, self.a2, self.a3, self.a4, self.a6
        b2 = a1 * a1 + 4 * a2
        b4 = 2 * a4 + a1 * a3
        b6 = a3 * a3 + 4 * a6
        b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
        return b2, b4, b6, b8

    @property
    def discriminant(self) -> Fraction:
        b2, b4, b6, b8 = self.b_invariants
        return -b2 * b2 * b8 - 8 * b4**3 - 27 * b6 * b6 + 9 * b2 * b4 * b6

    def __str__(self):
        return (f"Y^2 + ({self.a1})XY + ({self.a3})Y = "
                f"X^3 + ({self.a2})X^2 + ({self.a4})X + ({self.a6})")

    def is_on_curve(self, p: ECPoint) -> bool:
        if p is INFINITY:
            return True
        X, Y = p
        return (Y * Y + self.a1 * X * Y + self.a3 * Y
                == X**3 + self.a2 * X * X + self.a4 * X + self.a6)

    def neg(self, p: ECPoint) -> ECPoint:
        if p is INFINITY:
            return p
        return Point(p.X, -p.Y - self.a1 * p.X - self.a3)

    def add(self, p: ECPoint, q: ECPoint) -> ECPoint:
        if p is INFINITY:
            return q
        if q is INFINITY:
            return p
        x1, y1 = p
        x2, y2 = q
        if x1 == x2:
            # same X: either q = -p or q = p
            if y1 + y2 + self.a1 * x2 + self.a3 == 0:
                return INFINITY
            lam = ((3 * x1 * x1 + 2 * self.a2 * x1 + self.a4 - self.a1 * y1)
                   / (2 * y1 + self.a1 * x1 + self.a3))
        else:
            lam = (y2 - y1) / (x2 - x1)
        nu = y1 - lam * x1
        x3 = lam * lam + self.a1 * lam - self.a2 - x1 - x2
        y3 = -(lam + self.a1) * x3 - nu - self.a3
        return Point(x3, y3)

    def double(self, p: ECPoint) -> ECPoint:
        return self.add(p, p)

    def mul(self, j: int, p: ECPoint) -> ECPoint:
        """j*p by double-and-add; negative j uses -p."""
        if j < 0:
            return self.mul(-j, self.neg(p))
        result, addend = INFINITY, p
        while j:
            if j & 1:
                result = self.add(result, addend)
            j >>= 1
            if j:
                addend = self.double(addend)
        return result

    def multiples(self, p: ECPoint, count: int):
        """Yield p, 2p, ..., count*p by repeated addition."""
        acc = INFINITY
        for _ in range(count):
            acc = self.add(acc, p)
            yield acc

    def torsion_order(self, p: ECPoint) -> int | None:
        """Order of p if it is at most 12, else None (p has infinite order)."""
        for j, q in enumerate(self.multiples(p, MAZUR_BOUND), start=1):
            if q is INFINITY:
                return j
        return None

    def is_nontorsion(self, p: ECPoint) -> bool:
        if p is INFINITY:
            raise ValueError("the point at infinity is torsion")
        return self.torsion_order(p) is None
