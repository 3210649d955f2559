"""Richmond's tangent-line descent for x^4 + y^4 = n (z^4 + w^4).

Work is done in that orientation: ``seed = (x0, y0, z0, w0)`` with
x0^4 + y0^4 = n (z0^4 + w0^4).  Results are handed back as Quadruples
in the usual n(x^4+y^4) = z^4+w^4 orientation, i.e. (n, z, w, x, y).

Along the line v0 + t d the quartic form expands to c1 t + c2 t^2 + c3 t^3 + c4 t^4.
Directions d with c1 = c2 = 0 lie on the conic {tangent plane} ∩ {Hessian
quadric}, which is always singular at the trivial direction v0; it splits
into two rational lines exactly when a binary discriminant is a square.
Every d on one of those lines gives the same new point v0 + t d, t = -c3/c4.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import islice
from math import comb, gcd, lcm
from typing import Iterable, NamedTuple, Sequence

from .arith import Quadruple, normalize_quadruple, rat_sqrt_exact
from .errors import (DegenerateStep, NoNontrivialDirection, NotASquare,
                     QuartikaError, ZeroQuartic)

__all__ = [
    "Selector",
    "RichmondState",
    "DEFAULT_P_VALUES",
    "default_selectors",
    "seed_from_quadruple",
    "expand_coefficients",
    "tangent_lines",
    "solve_direction",
    "descend_step",
    "descend",
    "chain",
]

DEFAULT_P_VALUES = tuple(Fraction(v) for v in (1, 2, -1, Fraction(1, 2), 3, -2, 5, -3))
MAX_SELECTOR_RETRIES = 8

# d = (p, q, r, s); s is pinned to 1 and p is the free parameter
P_IDX, R_IDX, S_IDX = 0, 2, 3


class _NoAffineChart(NoNontrivialDirection):
    """The selected line has no point with s = 1 parameterized by p."""


class Selector(NamedTuple):
    branch: int = 0
    p: Fraction = Fraction(1)


def default_selectors() -> Iterable[Selector]:
    for p in DEFAULT_P_VALUES:
        for branch in (0, 1):
            yield Selector(branch, p)


@dataclass
class RichmondState:
    n: int
    known: tuple
    direction: tuple = ()
    coefficients: tuple = ()
    t: Fraction | None = None
    result: Quadruple | None = None
    history: list = field(default_factory=list)


def _weights(n):
    return (1, 1, -n, -n)


def _check_seed(n, seed):
    x0, y0, z0, w0 = seed
    if x0**4 + y0**4 != n * (z0**4 + w0**4):
        raise ValueError(f"seed {tuple(seed)} does not satisfy x^4+y^4 = {n}(z^4+w^4)")
    if not any(seed):
        raise ValueError("all-zero seed")


def seed_from_quadruple(q: Quadruple) -> tuple:
    """(n, x, y, z, w) in the usual orientation -> seed (z, w, x, y)."""
    return (q.z, q.w, q.x, q.y)


def expand_coefficients(n, seed, p, q, r, s=1):
    """(c1, c2, c3, c4) of (x0+pt)^4 + (y0+qt)^4 - n((z0+rt)^4 + (w0+st)^4)."""
    _check_seed(n, seed)
    d = (p, q, r, s)
    e = _weights(n)
    return tuple(
        comb(4, k) * sum(e[i] * seed[i] ** (4 - k) * d[i] ** k for i in range(4))
        for k in range(1, 5)
    )


def _primitive(v):
    v = [Fraction(c) for c in v]
    den = lcm(*(c.denominator for c in v))
    ints = [c.numerator * (den // c.denominator) for c in v]
    g = gcd(*ints)
    return tuple(Fraction(c // g) for c in ints)


def _slope(seed, e):
    # dr/dp along the line {v0 + mu e} in the chart s = 1
    num = e[R_IDX] * seed[S_IDX] - seed[R_IDX] * e[S_IDX]
    den = e[P_IDX] * seed[S_IDX] - seed[P_IDX] * e[S_IDX]
    return float("inf") if den == 0 else Fraction(num, 1) / den


def tangent_lines(n, seed) -> list:
    """Direction vectors e of the rational lines through v0 on which c1 = c2 = 0.

    Sorted by decreasing slope dr/dp.  Raises NoNontrivialDirection if the
    lines are conjugate over a quadratic field.
    """
    _check_seed(n, seed)
    e = _weights(n)
    v0 = tuple(Fraction(c) for c in seed)
    g = [e[i] * v0[i] ** 3 for i in range(4)]
    k = next(i for i in range(4) if g[i] != 0)
    kernel = {}
    for i in range(4):
        if i == k:
            continue
        vec = [Fraction(0)] * 4
        vec[i], vec[k] = g[k], -g[i]
        kernel[i] = vec
    # v0 = sum (v0_i / g_k) K_i; dropping a K_i with v0_i != 0 leaves a complement
    drop = next(i for i in kernel if v0[i] != 0)
    u1, u2 = (kernel[i] for i in kernel if i != drop)

    def bil(a, b):
        return sum(e[i] * v0[i] ** 2 * a[i] * b[i] for i in range(4))

    A, B, C = bil(u1, u1), bil(u1, u2), bil(u2, u2)
    disc = B * B - A * C
    if A == B == C == 0:
        pairs = [(1, 0), (0, 1)]
    elif disc < 0:
        raise NoNontrivialDirection(f"tangent lines at {seed} are complex conjugate")
    else:
        try:
            root = rat_sqrt_exact(disc)
        except NotASquare:
            raise NoNontrivialDirection(
                f"tangent lines at {seed} are irrational (discriminant {disc})") from None
        if A != 0:
            pairs = [(-B + root, A), (-B - root, A)]
        elif B != 0:
            pairs = [(1, 0), (C, -2 * B)]
        else:
            pairs = [(1, 0)]
    lines = []
    for beta, gamma in pairs:
        vec = _primitive([beta * u1[i] + gamma * u2[i] for i in range(4)])
        if vec not in lines:
            lines.append(vec)
    lines.sort(key=lambda vec: _slope(v0, vec), reverse=True)
    return lines


def _as_selector(selector) -> Selector:
    if isinstance(selector, Selector):
        return selector
    return Selector(0, Fraction(selector))


def solve_direction(n, seed, selector=Selector()):
    """Direction (p, q, r, 1) with c1 = c2 = 0 on the selected tangent line.

    ``selector`` is a Selector or a bare p value (branch 0).
    """
    selector = _as_selector(selector)
    lines = tangent_lines(n, seed)
    if selector.branch >= len(lines):
        raise NoNontrivialDirection(f"branch {selector.branch} does not exist ({len(lines)} lines)")
    ev = lines[selector.branch]
    v0 = tuple(Fraction(c) for c in seed)
    p = Fraction(selector.p)
    # d = alpha v0 + mu e, with d_s = 1 and d_p = p
    det = v0[S_IDX] * ev[P_IDX] - v0[P_IDX] * ev[S_IDX]
    if det == 0:
        raise _NoAffineChart("line cannot be parameterized by p with s = 1")
    mu = (v0[S_IDX] * p - v0[P_IDX]) / det
    if mu == 0:
        raise DegenerateStep(f"p = {p} selects the trivial direction")
    if v0[S_IDX] != 0:
        alpha = (1 - mu * ev[S_IDX]) / v0[S_IDX]
    else:
        alpha = (p - mu * ev[P_IDX]) / v0[P_IDX]
    return tuple(alpha * v0[i] + mu * ev[i] for i in range(4))


def descend_step(n, seed, selector=Selector()) -> RichmondState:
    selector = _as_selector(selector)
    try:
        d = solve_direction(n, seed, selector)
    except _NoAffineChart:
        # the new point depends only on the line, so use its direction vector
        d = tangent_lines(n, seed)[selector.branch]
    c = expand_coefficients(n, seed, *d)
    if c[3] == 0:
        raise ZeroQuartic(f"c4 = 0 along {d}")
    t = -c[2] / c[3]
    if t == 0:
        raise DegenerateStep("t = 0: the line meets the surface only at the seed")
    new = [seed[i] + t * d[i] for i in range(4)]
    x, y, z, w = new
    result = normalize_quadruple(n, z, w, x, y)
    start = normalize_quadruple(n, seed[2], seed[3], seed[0], seed[1])
    if result.canonical() == start.canonical():
        raise DegenerateStep("descent returned the seed")
    return RichmondState(n, tuple(seed), d, c, t, result)


def descend(n, seed, selector=Selector()) -> Quadruple:
    """One descent step; the new solution as Quadruple(n, z, w, x, y)."""
    return descend_step(n, seed, selector).result


def chain(n, seed, steps: int, selectors: Sequence[Selector] | None = None) -> list:
    """Iterate descent, feeding each output back in as the next seed.

    ``seed`` is either a tuple in the x^4+y^4 = n(z^4+w^4) orientation or a
    Quadruple.  For each step up to 8 selectors are tried.
    """
    if steps < 1:
        raise ValueError("steps must be >= 1")
    if isinstance(seed, Quadruple):
        seed = seed_from_quadruple(seed)
    _check_seed(n, seed)
    seen = {normalize_quadruple(n, seed[2], seed[3], seed[0], seed[1]).canonical()}
    out = []
    for step in range(steps):
        tried = list(islice(selectors if selectors is not None else default_selectors(),
                            MAX_SELECTOR_RETRIES))
        last_err, duplicate = None, False
        for sel in tried:
            try:
                q = descend(n, seed, sel)
            except QuartikaError as err:
                last_err = err
                continue
            if q.canonical() in seen:
                duplicate = True
                continue
            break
        else:
            if duplicate:
                warnings.warn(f"richmond chain for n={n} collapsed at step {step + 1}")
                return out
            raise last_err
        seen.add(q.canonical())
        out.append(q)
        seed = seed_from_quadruple(q)
    return out
