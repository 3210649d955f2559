# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled scan for the smallest multiple-of-n hit in a sorted table of x^4+y^4."""
from libc.stdint cimport uint64_t, int64_t

import numpy as np

BACKEND = "cython"


cdef inline Py_ssize_t _lower_bound(const uint64_t[::1] a, Py_ssize_t hi, uint64_t v) noexcept nogil:
    cdef Py_ssize_t lo = 0, mid
    while lo < hi:
        mid = (lo + hi) >> 1
        if a[mid] < v:
            lo = mid + 1
        else:
            hi = mid
    return lo


cdef inline void _scan(const uint64_t[::1] sums, uint64_t n,
                       Py_ssize_t *hit_s, Py_ssize_t *hit_t) noexcept nogil:
    cdef Py_ssize_t i, j, size = sums.shape[0]
    cdef uint64_t s, t
    hit_s[0] = -1
    hit_t[0] = -1
    for i in range(size):
        s = sums[i]
        if s % n == 0:
            t = s // n
            # t <= s, so only the prefix up to i can hold it
            j = _lower_bound(sums, i + 1, t)
            if sums[j] == t:
                hit_s[0] = i
                hit_t[0] = j
                return


def first_hit(const uint64_t[::1] sums, n):
    """(index of s, index of s/n) for the smallest s divisible by n whose
    quotient is also in ``sums``; (-1, -1) if none."""
    cdef Py_ssize_t hs, ht
    cdef uint64_t nn = n
    with nogil:
        _scan(sums, nn, &hs, &ht)
    return hs, ht


def first_hits(const uint64_t[::1] sums, ns):
    """Vectorized ``first_hit`` over an array of multipliers."""
    cdef const uint64_t[::1] nv = np.ascontiguousarray(ns, dtype=np.uint64)
    cdef Py_ssize_t k, m = nv.shape[0]
    out = np.empty((m, 2), dtype=np.int64)
    cdef int64_t[:, ::1] ov = out
    cdef Py_ssize_t hs, ht
    with nogil:
        for k in range(m):
            _scan(sums, nv[k], &hs, &ht)
            ov[k, 0] = hs
            ov[k, 1] = ht
    return out
