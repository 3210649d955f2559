"""Closed-form parametric families and the elliptic-curve pipelines.

Every pipeline takes a multiple j*P of the distinguished point, maps it to
the quartic, recovers (x, y, z, w) over Q and normalizes to a Quadruple.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arith import Quadruple, normalize_quadruple, rat_sqrt_exact, verify
from .elliptic import Point
from .errors import DegenerateFamily, OutOfScope
from .quartic import QuarticPoint, instance17_link, instance41_link, theorem1_link

__all__ = [
    "FamilyParams",
    "PipelineResult",
    "family1_closed_form",
    "family2_closed_form",
    "pipeline_theorem1",
    "pipeline_theorem2",
    "pipeline_instance41",
    "pipeline_instance17",
    "family1_xy",
]


@dataclass(frozen=True)
class FamilyParams:
    m: int
    n: int = 1

    def __post_init__(self):
        if self.m == 0 or self.n == 0:
            raise ValueError("parameters must be nonzero")
        if (self.m - self.n) % 2:
            raise OutOfScope(f"(m, n) = ({self.m}, {self.n}) have opposite parity")

    @property
    def a(self) -> int:
        return (self.m**2 - self.n**2) // 2

    @property
    def b(self) -> int:
        return (self.m**2 + self.n**2) // 2

    @property
    def multiplier(self) -> int:
        return self.a**2 + self.b**2


@dataclass(frozen=True)
class PipelineResult:
    j: int
    point: Point
    quartic_point: QuarticPoint
    k: Fraction
    raw: tuple
    quadruple: Quadruple


def _closed_form(N, x, y, z, w):
    if x == 0 and y == 0:
        raise DegenerateFamily(f"x = y = 0 for multiplier {N}")
    if not verify(N, x, y, z, w):
        # a transcription error in the polynomials would land here
        raise AssertionError(f"closed form failed: {N}, {(x, y, z, w)}")
    return normalize_quadruple(N, x, y, z, w)


def family1_closed_form(m: int, n: int, which: str = "2Q") -> Quadruple:
    """Solution for N = (m^4+n^4)/2 from the 2Q or 3Q point on the (m, n) curve."""
    N = FamilyParams(m, n).multiplier
    if which == "2Q":
        x = -n**4 + 4 * m**2 * n**2 + m**4
        y = n**4 + 4 * m**2 * n**2 - m**4
        z = (3 * n**4 + m**4) * m
        w = (n**4 + 3 * m**4) * n
    elif which == "3Q":
        x = (m**12 + 12 * n**2 * m**10 - 19 * m**8 * n**4 + 40 * n**6 * m**6
             + 19 * m**4 * n**8 + 12 * n**10 * m**2 - n**12)
        y = (-m**12 + 12 * n**2 * m**10 + 19 * m**8 * n**4 + 40 * n**6 * m**6
             - 19 * m**4 * n**8 + 12 * n**10 * m**2 + n**12)
        z = m * (m**12 + 41 * m**8 * n**4 + 27 * m**4 * n**8 - 5 * n**12)
        w = n * (-n**12 - 41 * m**4 * n**8 - 27 * m**8 * n**4 + 5 * m**12)
    else:
        raise ValueError(f"which must be '2Q' or '3Q', not {which!r}")
    return _closed_form(N, x, y, z, w)


def family2_closed_form(m: int, which: str = "first") -> Quadruple:
    """Solution for N = (m^4+1)/2, m odd, from the second identity."""
    if m % 2 == 0:
        raise OutOfScope(f"m = {m} is even")
    if abs(m) == 1:
        raise DegenerateFamily("m = 1 gives the trivial solution of 1(x^4+y^4) = z^4+w^4")
    N = (m**4 + 1) // 2
    if which == "first":
        x = m**4 + 4 * m**2 - 1
        y = m**4 - 4 * m**2 - 1
        z = 3 * m**4 + 1
        w = (m**4 + 3) * m
    elif which == "second":
        x = m**12 + 12 * m**10 - 19 * m**8 + 40 * m**6 + 19 * m**4 + 12 * m**2 - 1
        y = m**12 - 12 * m**10 - 19 * m**8 - 40 * m**6 + 19 * m**4 - 12 * m**2 - 1
        z = 5 * m**12 - 27 * m**8 - 41 * m**4 - 1
        w = m * (m**12 + 41 * m**8 + 27 * m**4 - 5)
    else:
        raise ValueError(f"which must be 'first' or 'second', not {which!r}")
    return _closed_form(N, x, y, z, w)


def family1_xy(k, m, a):
    """The (x, y) parameterization solving a x^2 + b y^2 = square, with a + b = m^2."""
    x = k * k - 2 * m * k + 4 * a - 3 * m * m
    y = -k * k - 2 * m * k + 4 * a - m * m
    return x, y


def _brahmagupta_result(j, P, qp, k, m, a, b, w):
    x, y = family1_xy(k, m, a)
    z = rat_sqrt_exact(Fraction(a * x * x + b * y * y))
    raw = (x, y, z, w)
    return PipelineResult(j, P, qp, k, raw, normalize_quadruple(a * a + b * b, *raw))


def pipeline_theorem1(m: int, n: int, j: int) -> PipelineResult:
    """j-th multiple of the distinguished point on E(m, n), mapped to a Quadruple.

    Raises ExceptionalPoint when jP lands where the maps are undefined.
    """
    if j < 2:
        raise ValueError("j must be >= 2 (j = 1 is the marked point U = 0)")
    params = FamilyParams(m, n)
    link = theorem1_link(m, n)
    P = link.curve.mul(j, link.generator)
    qp = link.forward(P)
    if qp.U == 0:
        raise DegenerateFamily(f"{j}P maps to U = 0")
    k = 1 / qp.U
    # V^2 = U^4 v^2(1/U), so v = V k^2
    w = abs(qp.V) * k * k
    return _brahmagupta_result(j, P, qp, k, m, params.a, params.b, w)


def pipeline_theorem2(m: int, j: int) -> PipelineResult:
    """N = (m^4+1)/2 for odd m, run through the (m, 1) curve of the first family."""
    if m % 2 == 0:
        raise OutOfScope(f"m = {m} is even")
    return pipeline_theorem1(m, 1, j)


def pipeline_instance41(j: int) -> PipelineResult:
    if j < 1:
        raise ValueError("j must be positive")
    link = instance41_link()
    P = link.curve.mul(j, link.generator)
    qp = link.forward(P)
    k = qp.U
    return _brahmagupta_result(j, P, qp, k, link.m, link.a, link.b, abs(qp.V))


def instance17_xyw(k):
    """Rational point on (1+10t+8t^2)x^2 + (4+6t-2t^2)y^2 + (2t^2+1+2t)w^2 = 0."""
    return 2 * (k - 2) * (k - 3), (k - 1) * (3 * k - 7), 25 + 5 * k * k - 22 * k


def pipeline_instance17(j: int) -> PipelineResult:
    if j < 1:
        raise ValueError("j must be positive")
    link = instance17_link()
    P = link.curve.mul(j, link.generator)
    qp = link.forward(P)
    k = qp.U
    x, y, w = instance17_xyw(k)
    # 17 y^2 - w^2 = 16 (2k^2-5k+1)(4k^2-15k+13) = 16 V^2
    z = 2 * abs(qp.V)
    raw = (x, y, z, w)
    return PipelineResult(j, P, qp, k, raw, normalize_quadruple(17, *raw))
