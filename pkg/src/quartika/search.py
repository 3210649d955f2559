"""Brute-force smallest solutions of n(x^4+y^4) = z^4+w^4.

All values x^4+y^4 with 0 <= x <= y <= B are sorted once.  For a given n
the table is scanned upward; the first s = z^4+w^4 divisible by n whose
quotient s/n is also in the table is the minimal hit.  The scan itself is
the compiled ``_search_core`` kernel when available, otherwise a numpy
fallback with the same interface.
"""
from __future__ import annotations

import logging
import os
import tempfile
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .arith import Quadruple, verify

try:
    from . import _search_core as _kernel
except ImportError:  # extension not built
    from . import _search_py as _kernel

log = logging.getLogger(__name__)

BACKEND = _kernel.BACKEND
DEFAULT_RESIDUES = frozenset({1, 2, 8, 9})
UINT64_MAX = 2**64 - 1

__all__ = [
    "BACKEND",
    "DEFAULT_RESIDUES",
    "SearchConfig",
    "SearchHit",
    "SumTable",
    "admissible",
    "is_fourth_power_free",
    "build_table",
    "smallest_for_n",
    "sweep",
    "sweep_outcomes",
    "read_checkpoint",
    "write_checkpoint",
]


@dataclass(frozen=True)
class SearchConfig:
    n_min: int
    n_max: int
    bound: int
    residues: frozenset = DEFAULT_RESIDUES
    threads: int = 0
    checkpoint: str | None = None
    allow_zero: bool = False
    fourth_power_free: bool = True

    def __post_init__(self):
        if not 1 <= self.n_min <= self.n_max:
            raise ValueError(f"need 1 <= n_min <= n_max, got {self.n_min}, {self.n_max}")
        if self.bound < 1:
            raise ValueError(f"bound must be >= 1, got {self.bound}")
        object.__setattr__(self, "residues", frozenset(r % 16 for r in self.residues))


@dataclass(frozen=True)
class SearchHit:
    quadruple: Quadruple
    s: int
    minimal: bool = True

    @property
    def n(self):
        return self.quadruple.n


@dataclass(frozen=True)
class SumTable:
    """Sorted x^4+y^4 values for 0 <= x <= y <= bound, (x, y) != (0, 0).

    Sorted by (value, x), so the first entry of a value has the smallest x.
    """

    bound: int
    allow_zero: bool
    sums: np.ndarray
    xs: np.ndarray
    ys: np.ndarray = field(repr=False)

    def __len__(self):
        return len(self.sums)


def is_fourth_power_free(n: int) -> bool:
    """No d > 1 with d^4 | n; otherwise every solution is a rescaled one for n/d^4."""
    d = 2
    while d**4 <= n:
        if n % d**4 == 0:
            return False
        d += 1
    return True


def admissible(n: int, residues=DEFAULT_RESIDUES) -> bool:
    """n mod 16 in ``residues``; an empty filter admits everything."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if not residues:
        return True
    return n % 16 in residues


@lru_cache(maxsize=4)
def build_table(bound: int, allow_zero: bool = False) -> SumTable:
    if bound < 1:
        raise ValueError("bound must be >= 1")
    ys, xs = np.triu_indices(bound + 1)
    xs, ys = np.minimum(xs, ys), np.maximum(xs, ys)
    keep = ys > 0 if allow_zero else xs > 0
    xs, ys = xs[keep], ys[keep]
    if 2 * bound**4 <= UINT64_MAX:
        x4 = xs.astype(np.uint64) ** 4
        y4 = ys.astype(np.uint64) ** 4
        sums = x4 + y4
    else:
        # past 64 bits: exact Python ints, numpy fallback only
        sums = np.array([int(a) ** 4 + int(b) ** 4 for a, b in zip(xs, ys)], dtype=object)
    order = np.lexsort((xs, sums))
    return SumTable(bound, allow_zero, sums[order], xs[order].astype(np.int64), ys[order].astype(np.int64))


def _first_hit(table: SumTable, n: int):
    if table.sums.dtype == object:
        from . import _search_py
        return _search_py.first_hit(table.sums, n)
    return _kernel.first_hit(table.sums, n)


def _hit_from_indices(table, n, i_s, i_t) -> SearchHit:
    x, y = int(table.xs[i_t]), int(table.ys[i_t])
    z, w = int(table.xs[i_s]), int(table.ys[i_s])
    s = int(table.sums[i_s])
    if not verify(n, x, y, z, w):
        raise AssertionError(f"kernel returned a non-solution for n={n}: {(x, y, z, w)}")
    return SearchHit(Quadruple(n, x, y, z, w), s)


def smallest_for_n(n: int, bound: int, table: SumTable | None = None,
                   allow_zero: bool = False) -> SearchHit | None:
    """Minimal s = z^4+w^4 = n(x^4+y^4) with 1 <= x, y, z, w <= bound.

    ``allow_zero`` admits zero coordinates (which makes e.g. n = 2 trivial).
    Returns None when nothing exists within the bound, which says nothing
    about existence beyond it.
    """
    if n < 1 or bound < 1:
        raise ValueError("n and bound must be >= 1")
    if table is None:
        table = build_table(bound, allow_zero)
    elif (table.bound, table.allow_zero) != (bound, allow_zero):
        raise ValueError("table was built for a different bound or zero policy")
    i_s, i_t = _first_hit(table, n)
    if i_s < 0:
        return None
    return _hit_from_indices(table, n, i_s, i_t)


def read_checkpoint(path) -> dict:
    """n -> SearchHit or None from a checkpoint file; {} if missing or corrupt.

    Lines are ``n,status,x,y,z,w,s``.  A checkpoint is only meaningful for
    the bound it was produced with.
    """
    if not path or not os.path.exists(path):
        return {}
    done = {}
    try:
        with open(path) as fh:
            for line in fh:
                if not line.endswith("\n"):
                    raise ValueError("truncated line")
                n, status, *rest = line.rstrip("\n").split(",")
                if len(rest) != 5:
                    raise ValueError(f"bad field count in {line!r}")
                n = int(n)
                if status == "hit":
                    x, y, z, w, s = map(int, rest)
                    q = Quadruple(n, x, y, z, w)
                    if q.s != s:
                        raise ValueError(f"objective mismatch in {line!r}")
                    done[n] = SearchHit(q, s)
                elif status == "notfound" and not any(rest):
                    done[n] = None
                else:
                    raise ValueError(f"bad status in {line!r}")
    except (ValueError, TypeError) as err:
        log.warning("checkpoint %s is corrupt (%s); starting fresh", path, err)
        return {}
    return done


def _checkpoint_line(n, hit):
    if hit is None:
        return f"{n},notfound,,,,,\n"
    q = hit.quadruple
    return f"{n},hit,{q.x},{q.y},{q.z},{q.w},{hit.s}\n"


def write_checkpoint(path, done: dict):
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".quartika-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            for n in sorted(done):
                fh.write(_checkpoint_line(n, done[n]))
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def sweep_outcomes(config: SearchConfig) -> dict:
    """n -> SearchHit or None for every admissible n in range, ordered by n."""
    ns = [n for n in range(config.n_min, config.n_max + 1)
          if admissible(n, config.residues)
          and (not config.fourth_power_free or is_fourth_power_free(n))]
    done = read_checkpoint(config.checkpoint)
    todo = [n for n in ns if n not in done]
    if todo:
        table = build_table(config.bound, config.allow_zero)
        threads = config.threads or os.cpu_count() or 1
        log.info("searching %d values of n with B=%d on %d thread(s) [%s]",
                 len(todo), config.bound, threads, BACKEND)

        def run(n):
            return n, smallest_for_n(n, config.bound, table, config.allow_zero)

        with ThreadPoolExecutor(max_workers=threads) as pool:
            for n, hit in pool.map(run, todo):
                done[n] = hit
                if config.checkpoint:
                    write_checkpoint(config.checkpoint, done)
    return {n: done[n] for n in ns}


def sweep(config: SearchConfig) -> list:
    return [hit for hit in sweep_outcomes(config).values() if hit is not None]
