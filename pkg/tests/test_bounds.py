import math

import pytest
from hypothesis import given, settings, strategies as st

from oddpart.harness.bounds import NEAR_BOUNDARY, BoundKind, alpha_constant, check_bound


def test_examples():
    r = check_bound(BoundKind.TWO, 3, 4)
    assert r.verdict and r.margin == 4096 - 648
    r = check_bound("THREE_HALVES", 10, 9)
    assert not r.verdict and r.margin == 9 ** 9 - 576 * 10 ** 6
    assert check_bound(BoundKind.PERM_2POW, 15, 5).verdict
    assert not check_bound(BoundKind.PERM_2POW, 17, 5).verdict


def test_exact_boundaries():
    # the largest passing a flips the verdict when incremented
    for size in (4, 8, 9, 25, 27):
        a = max(x for x in range(1, size ** 2) if 24 * x ** 3 <= size ** 6)
        assert check_bound(BoundKind.TWO, a, size).verdict
        assert not check_bound(BoundKind.TWO, a + 1, size).verdict
    assert check_bound(BoundKind.PERM_2POW, 2 ** 9, 10).margin == 0


def test_alpha():
    alpha = alpha_constant()
    approx = (3 * math.log(48) + math.log(24)) / (3 * math.log(9))
    assert abs(float(alpha) - approx) < 1e-12
    r = check_bound(BoundKind.ALPHA, 1, 9)
    assert r.verdict and not r.near_boundary
    # |V| = 9: |V|^alpha / lam = 48 exactly, so |G| = 48 sits on the boundary
    r = check_bound(BoundKind.ALPHA, 48, 9)
    assert r.near_boundary and abs(r.margin) < NEAR_BOUNDARY
    assert not check_bound(BoundKind.ALPHA, 49, 9).verdict


def test_rejects_non_positive():
    with pytest.raises(ValueError):
        check_bound(BoundKind.TWO, 0, 4)
    with pytest.raises(ValueError):
        check_bound("NOPE", 1, 4)


@settings(max_examples=300, derandomize=True)
@given(st.integers(1, 10 ** 6), st.integers(1, 200))
def test_exact_forms_match_rational_comparisons(a, v):
    # a <= v^2 / 24^(1/3)  <=>  a^3 <= v^6 / 24
    assert check_bound(BoundKind.TWO, a, v).verdict == (24 * a ** 3 <= v ** 6)
    assert check_bound(BoundKind.THREE_HALVES, a, v).verdict == (a ** 6 * 576 <= v ** 9)
    r = check_bound(BoundKind.TWO, a, v)
    assert r.to_dict()["margin"] == str(r.margin)
