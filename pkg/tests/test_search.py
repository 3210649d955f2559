import os

import numpy as np
import pytest

from quartika import _search_py, search
from quartika.arith import Quadruple, verify
from quartika.search import (SearchConfig, SearchHit, admissible, build_table,
                             is_fourth_power_free, read_checkpoint, smallest_for_n, sweep,
                             sweep_outcomes, write_checkpoint)
from reference_tables import SMALLEST_ROWS, canonical


def naive_smallest(n, bound, start=1):
    """Quadruple loop over all x <= y, z <= w; minimal s, then x, then z."""
    best = None
    fourth = [v**4 for v in range(bound + 1)]
    for z in range(start, bound + 1):
        for w in range(z, bound + 1):
            s = fourth[z] + fourth[w]
            if s == 0 or s % n:
                continue
            t = s // n
            for x in range(start, bound + 1):
                if 2 * fourth[x] > t:
                    break
                for y in range(x, bound + 1):
                    if fourth[x] + fourth[y] >= t:
                        if fourth[x] + fourth[y] == t:
                            cand = (s, x, z, (n, x, y, z, w))
                            if best is None or cand < best:
                                best = cand
                        break
    return best


def test_admissible():
    assert admissible(41)
    assert admissible(34)  # 34 = 2 mod 16; filtering is necessary-style only
    assert not admissible(16)
    assert admissible(16, residues=frozenset())
    with pytest.raises(ValueError):
        admissible(0)


def test_every_row_admissible_and_fourth_power_free():
    for n in SMALLEST_ROWS:
        assert admissible(n)
        assert is_fourth_power_free(n)


def test_fourth_power_free():
    assert [n for n in range(1, 200) if not is_fourth_power_free(n)][:5] == [16, 32, 48, 64, 80]
    assert not is_fourth_power_free(81) and not is_fourth_power_free(162)
    assert not is_fourth_power_free(625) and is_fourth_power_free(626)


def test_table_layout():
    t = build_table(5)
    assert len(t) == 15
    assert np.all(np.diff(t.sums.astype(object)) >= 0)
    assert (t.xs <= t.ys).all() and (t.xs >= 1).all()
    assert [int(v) for v in t.sums[:3]] == [2, 17, 32]
    assert len(build_table(5, allow_zero=True)) == 20


def test_table_ties_sorted_by_x():
    # 59^4 + 158^4 = 133^4 + 134^4
    t = build_table(160)
    val = 59**4 + 158**4
    idx = np.flatnonzero(t.sums == np.uint64(val))
    assert [int(t.xs[i]) for i in idx] == [59, 133]


def test_smallest_examples():
    assert smallest_for_n(17, 20).quadruple.canonical() == canonical(17, 5, 6, 13, 8)
    assert smallest_for_n(97, 120).quadruple.canonical() == canonical(97, 10, 37, 112, 71)
    hit = smallest_for_n(1, 20)
    assert hit.quadruple == Quadruple(1, 1, 1, 1, 1) and hit.s == 2
    assert smallest_for_n(34, 200) is None
    assert smallest_for_n(8, 39) is None
    assert smallest_for_n(2, 5, allow_zero=True).quadruple == Quadruple(2, 0, 1, 1, 1)


def test_smallest_rejects_mismatched_table():
    with pytest.raises(ValueError):
        smallest_for_n(17, 20, table=build_table(21))


@pytest.mark.parametrize("n", [2, 8, 17, 41])
@pytest.mark.parametrize("bound", [25, 40])
def test_matches_naive_oracle(n, bound):
    expected = naive_smallest(n, bound)
    hit = smallest_for_n(n, bound)
    if expected is None:
        assert hit is None
    else:
        s, _, _, quad = expected
        assert hit.s == s
        assert hit.quadruple == Quadruple(*quad)


@pytest.mark.parametrize("n", [1, 2, 17, 41, 82])
def test_naive_oracle_with_zeros(n):
    expected = naive_smallest(n, 12, start=0)
    hit = smallest_for_n(n, 12, allow_zero=True)
    assert hit is not None and expected is not None
    assert hit.s == expected[0]


def test_kernels_agree():
    table = build_table(300)
    ns = [n for n in range(1, 400)]
    py = _search_py.first_hits(table.sums, ns)
    core = search._kernel.first_hits(table.sums, ns)
    assert (py == core).all()
    for n in (2, 17, 97, 113, 34):
        assert search._kernel.first_hit(table.sums, n) == _search_py.first_hit(table.sums, n)


def test_object_dtype_fallback():
    table = build_table(40)
    big = np.array([int(v) for v in table.sums], dtype=object)
    for n in (2, 8, 17, 41, 34):
        assert _search_py.first_hit(big, n) == search._kernel.first_hit(table.sums, n)


def test_sweep_small_ranges():
    hits = sweep(SearchConfig(2, 50, 25))
    assert [h.n for h in hits] == [2, 17, 41]
    hits = sweep(SearchConfig(2, 50, 40))
    assert [h.n for h in hits] == [2, 8, 17, 41]
    for h in hits:
        assert h.quadruple.canonical() == canonical(h.n, *SMALLEST_ROWS[h.n])
    assert sweep(SearchConfig(16, 16, 10)) == []
    assert sweep_outcomes(SearchConfig(34, 34, 1000)) == {34: None}


def test_sweep_filters():
    out = sweep_outcomes(SearchConfig(80, 82, 10, residues=frozenset()))
    assert list(out) == [82]
    out = sweep_outcomes(SearchConfig(80, 82, 10, residues=frozenset(), fourth_power_free=False))
    assert list(out) == [80, 81, 82]
    assert out[81].quadruple == Quadruple(81, 1, 1, 3, 3)


def test_config_validation():
    with pytest.raises(ValueError):
        SearchConfig(5, 4, 10)
    with pytest.raises(ValueError):
        SearchConfig(0, 4, 10)
    with pytest.raises(ValueError):
        SearchConfig(1, 4, 0)


def test_sweep_deterministic_and_thread_invariant():
    a = sweep(SearchConfig(2, 200, 200, threads=1))
    b = sweep(SearchConfig(2, 200, 200, threads=4))
    assert a == b
    for h in a:
        assert verify(h.n, *h.quadruple.coords())


def test_checkpoint_roundtrip_and_resume(tmp_path):
    path = str(tmp_path / "ck.txt")
    config = SearchConfig(2, 60, 40, checkpoint=path)
    first = sweep_outcomes(config)
    text = open(path).read()
    assert text.splitlines()[0] == "2,hit,7,20,19,21,324802"
    assert "34,notfound,,,,,\n" in text
    assert text.endswith("\n")
    assert read_checkpoint(path) == first
    # a resumed run trusts the file and does no work for completed n
    calls = []
    orig = search.smallest_for_n
    try:
        search.smallest_for_n = lambda *a, **k: calls.append(a) or orig(*a, **k)
        assert sweep_outcomes(config) == first
    finally:
        search.smallest_for_n = orig
    assert calls == []
    assert not [f for f in os.listdir(tmp_path) if f.endswith(".tmp")]


def test_checkpoint_partial_resume(tmp_path):
    path = str(tmp_path / "ck.txt")
    write_checkpoint(path, {2: smallest_for_n(2, 40)})
    out = sweep_outcomes(SearchConfig(2, 20, 40, checkpoint=path))
    assert list(out) == [2, 8, 9, 17, 18]
    assert set(read_checkpoint(path)) == {2, 8, 9, 17, 18}


@pytest.mark.parametrize("bad", [
    "2,hit,7,20,19,21,5\n",         # wrong objective
    "2,hit,7,20,19,22,324802\n",    # not a solution
    "2,maybe,,,,,\n",
    "2,hit,7,20\n",
    "2,notfound,,,,,",              # truncated (no newline)
    "x,hit,7,20,19,21,324802\n",
])
def test_corrupt_checkpoint_starts_fresh(tmp_path, caplog, bad):
    path = tmp_path / "ck.txt"
    path.write_text(bad)
    assert read_checkpoint(str(path)) == {}
    assert "corrupt" in caplog.text


def test_search_hit_fields():
    hit = smallest_for_n(17, 20)
    assert isinstance(hit, SearchHit) and hit.minimal
    assert hit.s == hit.quadruple.s == 17 * (5**4 + 6**4)


def test_fallback_selected_without_extension():
    import subprocess
    import sys

    code = (
        "import sys; sys.modules['quartika._search_core'] = None\n"
        "from quartika import search\n"
        "print(search.BACKEND, search.smallest_for_n(97, 120).quadruple.coords())\n"
    )
    out = subprocess.run([sys.executable, "-c", code], capture_output=True, text=True, check=True)
    assert out.stdout.split()[0] == "numpy"
    assert "(10, 37, 71, 112)" in out.stdout
