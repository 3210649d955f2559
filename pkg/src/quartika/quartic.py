"""Quartic models V^2 = q(U) and their birational maps to Weierstrass curves.

Three families of maps are provided, transcribed as explicit rational
functions: the general model for parameters (m, n), and the two
fixed instances for multipliers 41 and 17.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .elliptic import INFINITY, ECPoint, Point, WeierstrassCurve
from .errors import ExceptionalPoint, OutOfScope

__all__ = [
    "QuarticPoint",
    "QuarticModel",
    "BirationalLink",
    "Theorem1Link",
    "Instance41Link",
    "Instance17Link",
    "theorem1_link",
    "instance41_link",
    "instance17_link",
]


class QuarticPoint(tuple):
    __slots__ = ()

    def __new__(cls, U, V):
        return super().__new__(cls, (Fraction(U), Fraction(V)))

    U = property(lambda self: self[0])
    V = property(lambda self: self[1])

    def __repr__(self):
        return f"QuarticPoint(U={self.U}, V={self.V})"


@dataclass(frozen=True)
class QuarticModel:
    """V^2 = q4 U^4 + q3 U^3 + q2 U^2 + q1 U + q0 with a marked rational point."""

    q4: Fraction
    q3: Fraction
    q2: Fraction
    q1: Fraction
    q0: Fraction
    marked_point: QuarticPoint

    def __post_init__(self):
        for name in ("q4", "q3", "q2", "q1", "q0"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.q4 == 0:
            raise ValueError("leading coefficient vanishes")
        if not self.contains(self.marked_point):
            raise ValueError(f"marked point {self.marked_point} is not on the quartic")

    @property
    def coefficients(self):
        return (self.q4, self.q3, self.q2, self.q1, self.q0)

    def evaluate(self, U) -> Fraction:
        acc = Fraction(0)
        for c in self.coefficients:
            acc = acc * U + c
        return acc

    def contains(self, pt) -> bool:
        U, V = pt
        return V * V == self.evaluate(U)

    def reversed(self) -> "QuarticModel":
        """The model in the variable 1/U (coefficients read backwards)."""
        U, V = self.marked_point
        if U == 0:
            raise ExceptionalPoint("marked point has U = 0")
        return QuarticModel(self.q0, self.q1, self.q2, self.q3, self.q4,
                            QuarticPoint(1 / U, V / (U * U)))


class BirationalLink:
    """Mutually inverse maps between a Weierstrass curve and a quartic model.

    ``forward`` goes curve -> quartic, ``backward`` quartic -> curve.  A
    vanishing denominator raises ``ExceptionalPoint``.  ``infinity_image`` is
    the quartic point corresponding to the curve's point at infinity, if
    affine.
    """

    name = "link"
    curve: WeierstrassCurve
    quartic: QuarticModel
    generator: Point
    infinity_image: QuarticPoint | None = None

    def forward(self, p: ECPoint) -> QuarticPoint:
        if p is INFINITY:
            if self.infinity_image is None:
                raise ExceptionalPoint(f"{self.name}: infinity maps outside the affine quartic")
            return self.infinity_image
        try:
            return self._forward(p.X, p.Y)
        except ZeroDivisionError:
            raise ExceptionalPoint(f"{self.name}: forward undefined at {p}") from None

    def backward(self, pt) -> ECPoint:
        pt = QuarticPoint(*pt)
        if self.infinity_image is not None and pt == self.infinity_image:
            return INFINITY
        try:
            return self._backward(pt.U, pt.V)
        except ZeroDivisionError:
            raise ExceptionalPoint(f"{self.name}: backward undefined at {pt}") from None

    def _forward(self, X, Y) -> QuarticPoint:
        raise NotImplementedError

    def _backward(self, U, V) -> Point:
        raise NotImplementedError

    def __repr__(self):
        return f"<{type(self).__name__} {self.name}>"


class Theorem1Link(BirationalLink):
    """Links V^2 = (5m^4n^2+4n^6)U^4 + (4m^5+8mn^4)U^3 - 2m^2n^2U^2 - 4m^3U + n^2
    to its curve E; here U = 1/k for the parameter k of the (x, y) family."""

    def __init__(self, m: int, n: int):
        if m == 0 or n == 0:
            raise ValueError("m and n must be nonzero")
        if (m - n) % 2:
            raise OutOfScope(f"(m, n) = ({m}, {n}) have opposite parity")
        self.m, self.n = m, n
        self.name = f"theorem1({m},{n})"
        self.curve = WeierstrassCurve(
            a1=Fraction(-4 * m**3, n),
            a2=Fraction(-2 * m**2 * (n**4 + 2 * m**4), n**2),
            a3=8 * n * m**5 + 16 * m * n**5,
            a4=-20 * m**4 * n**4 - 16 * n**8,
            a6=104 * m**6 * n**6 + 32 * m**2 * n**10 + 80 * m**10 * n**2,
        )
        self.quartic = QuarticModel(
            5 * m**4 * n**2 + 4 * n**6,
            4 * m**5 + 8 * m * n**4,
            -2 * m**2 * n**2,
            -4 * m**3,
            n**2,
            QuarticPoint(0, n),
        )
        self.generator = Point(Fraction(2 * m**2 * (n**4 + 2 * m**4), n**2),
                               Fraction(-16 * m * (n**8 - m**8), n**3))
        self.infinity_image = QuarticPoint(0, n)
        if not self.curve.is_on_curve(self.generator):
            raise AssertionError(f"{self.name}: distinguished point not on curve")

    def _forward(self, X, Y):
        m, n = self.m, self.n
        U = (2 * n**2 * X - 4 * m**2 * n**4 - 8 * m**6) / (Y * n)
        V = (n**4 * X**3 - 6 * n**6 * m**2 * X**2 - 12 * m**6 * n**2 * X**2
             + 28 * n**8 * m**4 * X + 32 * n**4 * m**8 * X + 32 * m**12 * X
             - 16 * m**9 * n * Y + 16 * n**9 * m * Y + 16 * n**12 * X
             - 104 * n**10 * m**6 - 32 * n**14 * m**2 - 80 * n**6 * m**10) / (Y * Y * n**3)
        return QuarticPoint(U, V)

    def _backward(self, U, V):
        m, n = self.m, self.n
        X = (2 * n * V + 2 * n**2 - 4 * m**3 * U) / (U * U)
        Y = (4 * n**3 * V + 4 * n**4 - 8 * n**2 * m**3 * U
             - 4 * n**4 * m**2 * U * U - 8 * m**6 * U * U) / (U**3 * n)
        return Point(X, Y)


class Instance41Link(BirationalLink):
    """V^2 = U^4 - 108U^3 - 18U^2 + 996U + 409 against
    Y^2 + XY + Y = X^3 - X^2 - 27X + 26.  Here U is k itself, (a, b, m) = (4, 5, 3)."""

    name = "instance41"
    a, b, m = 4, 5, 3

    def __init__(self):
        self.curve = WeierstrassCurve(1, -1, 1, -27, 26)
        self.generator = Point(Fraction(6), Fraction(-11))
        self.quartic = QuarticModel(1, -108, -18, 996, 409, QuarticPoint(-3, 16))

    def _forward(self, X, Y):
        U = (4 * Y + 29 * X - 10) / (X - 46)
        V = (16 * X**3 - 2208 * X**2 - 3392 * X + 13744 - 9840 * Y) / (X - 46) ** 2
        return QuarticPoint(U, V)

    def _backward(self, U, V):
        X = (V + U * U - 54 * U + 5) / 32
        Y = (U * V + U**3 - 83 * U * U + 99 * U - 29 * V + 175) / 128
        return Point(X, Y)


class Instance17Link(BirationalLink):
    """V^2 = 8U^4 - 50U^3 + 105U^2 - 80U + 13 against Y^2 = X^3 - 91X + 330.

    The marked point (2, 1) is the image of the point at infinity."""

    name = "instance17"

    def __init__(self):
        self.curve = WeierstrassCurve(0, 0, 0, -91, 330)
        self.generator = Point(Fraction(7), Fraction(-6))
        self.quartic = QuarticModel(8, -50, 105, -80, 13, QuarticPoint(2, 1))
        self.infinity_image = QuarticPoint(2, 1)

    def _forward(self, X, Y):
        d = Y + 2 * X - 12
        U = (6 * X - 36 + 2 * Y) / d
        V = (X**3 - 18 * X**2 + 91 * X - 114) / (d * d)
        return QuarticPoint(U, V)

    def _backward(self, U, V):
        X = (2 * V + 6 - U * U) / (U * U - 4 * U + 4)
        Y = (12 * V - 108 + 180 * U - 90 * U * U - 4 * V * U + 14 * U**3) / (U**3 - 6 * U * U + 12 * U - 8)
        return Point(X, Y)


def theorem1_link(m: int, n: int) -> Theorem1Link:
    return Theorem1Link(m, n)


_INSTANCE41 = None
_INSTANCE17 = None


def instance41_link() -> Instance41Link:
    global _INSTANCE41
    if _INSTANCE41 is None:
        _INSTANCE41 = Instance41Link()
    return _INSTANCE41


def instance17_link() -> Instance17Link:
    global _INSTANCE17
    if _INSTANCE17 is None:
        _INSTANCE17 = Instance17Link()
    return _INSTANCE17
