"""Compare the compiled search kernel with the numpy fallback.

    python3 benchmarks/bench_search.py [--bounds 300 600 1100] [--n-max 200] [--repeat 3]

Both kernels run on the same sorted table and must return identical hits.
"""
import argparse
import importlib
import time

import numpy as np

from quartika.search import build_table


def load_kernels():
    kernels = {"numpy": importlib.import_module("quartika._search_py")}
    try:
        kernels["cython"] = importlib.import_module("quartika._search_core")
    except ImportError:
        print("compiled kernel not built; timing the numpy fallback only")
    return kernels


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--bounds", type=int, nargs="+", default=[300, 600, 1100])
    ap.add_argument("--n-min", type=int, default=2)
    ap.add_argument("--n-max", type=int, default=200)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)

    kernels = load_kernels()
    ns = np.arange(args.n_min, args.n_max + 1, dtype=np.uint64)
    print(f"{'B':>6} {'pairs':>9} " + " ".join(f"{k + ' (s)':>12}" for k in kernels) + "  speedup")
    for bound in args.bounds:
        table = build_table(bound)
        results = {}
        for name, kern in kernels.items():
            results[name] = best_of(lambda: kern.first_hits(table.sums, ns), args.repeat)
        outs = [r[1] for r in results.values()]
        if not all(np.array_equal(outs[0], o) for o in outs[1:]):
            raise SystemExit(f"kernels disagree at B={bound}")
        secs = [r[0] for r in results.values()]
        speedup = f"{secs[0] / secs[1]:7.1f}x" if len(secs) == 2 else "      -"
        print(f"{bound:6d} {len(table.sums):9d} " + " ".join(f"{s:12.4f}" for s in secs) + "  " + speedup)


if __name__ == "__main__":
    main()
