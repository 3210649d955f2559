"""numpy fallback with the same interface as the compiled ``_search_core``."""
import numpy as np

BACKEND = "numpy"


def first_hit(sums, n):
    n = sums.dtype.type(n) if sums.dtype != object else int(n)
    idx = np.flatnonzero(sums % n == 0)
    if idx.size == 0:
        return -1, -1
    t = sums[idx] // n
    pos = np.searchsorted(sums, t)
    found = sums[np.minimum(pos, len(sums) - 1)] == t
    k = int(np.argmax(found))
    if not found[k]:
        return -1, -1
    return int(idx[k]), int(pos[k])


def first_hits(sums, ns):
    return np.array([first_hit(sums, n) for n in ns], dtype=np.int64).reshape(-1, 2)
