from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from quartika.arith import (Quadruple, int_sqrt_exact, is_reduced, normalize_quadruple,
                            rat_sqrt_exact, scale_transform, verify)
from quartika.errors import NotASquare
from reference_tables import SMALLEST_ROWS


def test_verify_known_rows():
    assert verify(41, 1, 1, 3, 1)
    assert verify(2, 0, 0, 0, 0)
    assert not verify(17, 5, 6, 13, 9)
    for n, row in SMALLEST_ROWS.items():
        assert verify(n, *row)


def test_normalize_clears_gcd_and_signs():
    # 2Q closed form at (m, n) = (3, 1), evaluated directly
    m, n = 3, 1
    raw = (-n**4 + 4 * m**2 * n**2 + m**4, n**4 + 4 * m**2 * n**2 - m**4,
           (3 * n**4 + m**4) * m, (n**4 + 3 * m**4) * n)
    assert raw == (116, -44, 252, 244)
    assert normalize_quadruple(41, *raw) == Quadruple(41, 29, 11, 63, 61)
    assert normalize_quadruple(2, 7, 20, 21, 19) == Quadruple(2, 7, 20, 21, 19)
    thirds = [Fraction(v, 3) for v in (29, 11, 63, 61)]
    assert normalize_quadruple(41, *thirds) == Quadruple(41, 29, 11, 63, 61)


def test_normalize_rejects_non_solution():
    with pytest.raises(ValueError):
        normalize_quadruple(17, 5, 6, 13, 9)
    with pytest.raises(ValueError):
        normalize_quadruple(3, 0, 0, 0, 0)


def test_quadruple_invariants():
    with pytest.raises(ValueError):
        Quadruple(41, 2, 2, 6, 2)  # not primitive
    with pytest.raises(ValueError):
        Quadruple(41, -1, 1, 3, 1)
    with pytest.raises(ValueError):
        Quadruple(17, 5, 6, 13, 9)
    with pytest.raises(TypeError):
        Quadruple(Fraction(1, 2), 1, 1, 1, 1)
    q = Quadruple(1, 0, 1, 0, 1)
    assert q.degenerate and q.s == 1


def test_int_sqrt_exact():
    assert int_sqrt_exact(169) == 13
    assert int_sqrt_exact(98 * 98) == 98 == int_sqrt_exact(9604)
    assert int_sqrt_exact(0) == 0
    with pytest.raises(NotASquare):
        int_sqrt_exact(170)
    with pytest.raises(ValueError) as err:
        int_sqrt_exact(-4)
    assert not isinstance(err.value, NotASquare)


def test_int_sqrt_large():
    big = 12509563104278834954874
    assert int_sqrt_exact(big * big) == big
    with pytest.raises(NotASquare):
        int_sqrt_exact(big * big + 1)


def test_rat_sqrt_exact():
    assert rat_sqrt_exact(Fraction(4, 9)) == Fraction(2, 3)
    assert rat_sqrt_exact(Fraction(0)) == 0
    with pytest.raises(NotASquare):
        rat_sqrt_exact(Fraction(2))
    with pytest.raises(NotASquare):
        rat_sqrt_exact(Fraction(4, 3))
    with pytest.raises(ValueError):
        rat_sqrt_exact(Fraction(-1, 4))


def test_scale_transform_examples():
    q = scale_transform(Quadruple(2, 7, 20, 21, 19))
    # 14^4 + 40^4 = 8 (19^4 + 21^4)
    assert q == Quadruple(8, 21, 19, 14, 40)
    assert 14**4 + 40**4 == 8 * (19**4 + 21**4)
    q = scale_transform(Quadruple(41, 1, 1, 3, 1))
    assert q == Quadruple(41**3, 3, 1, 41, 41)
    assert 41**4 + 41**4 == 41**3 * (3**4 + 1)
    # n = 1: the same equation with the sides swapped
    assert scale_transform(Quadruple(1, 2, 3, 3, 2)) == Quadruple(1, 3, 2, 2, 3)


@pytest.mark.parametrize("n", sorted(SMALLEST_ROWS))
def test_scale_transform_verifies(n):
    q = normalize_quadruple(n, *SMALLEST_ROWS[n])
    out = scale_transform(q)
    assert out.n == n**3 and verify(out.n, *out.coords())


rows = st.sampled_from(sorted(SMALLEST_ROWS.items()))


@given(rows, st.booleans(), st.booleans(), st.booleans(), st.booleans(), st.booleans())
def test_verify_symmetries(row, sx, sy, sz, swap_xy, swap_zw):
    n, (x, y, z, w) = row
    x, y, z = (-x if sx else x), (-y if sy else y), (-z if sz else z)
    if swap_xy:
        x, y = y, x
    if swap_zw:
        z, w = w, z
    assert verify(n, x, y, z, w)


@given(rows, st.integers(1, 10**6), st.integers(1, 10**6))
def test_normalize_idempotent_and_scale_invariant(row, num, den):
    n, coords = row
    lam = Fraction(num, den)
    q = normalize_quadruple(n, *(lam * c for c in coords))
    assert normalize_quadruple(n, *q.coords()) == q
    assert q.canonical() == normalize_quadruple(n, *coords).canonical()


@given(st.integers(-10**30, 10**30), st.integers(1, 10**30))
def test_fractions_stay_reduced(a, b):
    v = Fraction(a, b)
    for out in (v * v, v + Fraction(1, b), v / (b + 1), -v):
        assert is_reduced(out)
