from math import gcd

import pytest
from hypothesis import given, strategies as st

from latpath import formulas as F
from latpath.paths import DomainError, PathProfile

import oracles


def brute_dyck(n, m, j=None):
    words = [w for w in oracles.nm_words(n, m) if oracles.nm_is_dyck_fraction(w, n, m)]
    if j is not None:
        words = [w for w in words if w.count("UD") == j]
    return len(words)


def brute_free(n, m, j, ud=False):
    words = oracles.nm_words(n, m)
    if ud:
        words = [w for w in words if w.startswith("U") and w.endswith("D")]
    return sum(1 for w in words if w.count("UD") == j)


def brute_kary(k, n, j=None):
    prof = PathProfile.ka(k, None)
    words = [w for w in oracles.ka_words(prof, (k + 1) * n) if oracles.is_strict(w)]
    if j is not None:
        words = [w for w in words if len(oracles.peaks_of(w)) == j]
    return len(words)


@pytest.mark.parametrize("n,r,expected", [(5, 2, 10), (4, 0, 1), (3, 5, 0), (-1, 0, 0), (4, -1, 0)])
def test_binomial(n, r, expected):
    assert F.binomial(n, r) == expected


def test_d_nm_examples():
    # frozen from brute_dyck
    assert F.d_nm(2, 3) == 2 == brute_dyck(2, 3)
    assert F.d_nm(5, 7) == 66 == brute_dyck(5, 7)
    assert F.d_nm(1, 1) == 1


@pytest.mark.parametrize("n,m", [(2, 4), (3, 3), (0, 1)])
def test_d_nm_rejects_non_coprime(n, m):
    with pytest.raises(DomainError):
        F.d_nm(n, m)


def test_f_nm_j_examples():
    assert (F.f_nm_j(2, 3, 1), F.f_nm_j(2, 3, 0), F.f_nm_j(2, 3, 2)) == (6, 1, 3)
    assert [brute_free(2, 3, j) for j in range(3)] == [1, 6, 3]


def test_f_ud_nm_j_examples():
    assert (F.f_ud_nm_j(2, 3, 2), F.f_ud_nm_j(2, 3, 1), F.f_ud_nm_j(1, 1, 1)) == (2, 1, 1)
    assert [brute_free(2, 3, j, ud=True) for j in (1, 2)] == [1, 2]


def test_d_nm_j_examples():
    assert F.d_nm_j(2, 3, 1) == 1 == brute_dyck(2, 3, 1)
    assert F.d_nm_j(2, 3, 2) == 1 == brute_dyck(2, 3, 2)
    assert sum(F.d_nm_j(5, 7, j) for j in range(1, 6)) == 66
    row = [F.d_nm_j(4, 5, j) for j in range(1, 5)]
    assert row == [brute_dyck(4, 5, j) for j in range(1, 5)]
    assert sum(row) == F.d_nm(4, 5) == 14


def test_kary_examples():
    assert F.kary_count(2, 2) == 3 == brute_kary(2, 2)
    assert F.kary_count(1, 3) == 5 == F.catalan(3)
    assert [F.kary_peaks_count(2, 2, j) for j in (1, 2)] == [1, 2]
    assert [brute_kary(2, 2, j) for j in (1, 2)] == [1, 2]


def test_narayana_catalan_delta():
    # (4,5)-Dyck paths correspond to ordinary Dyck paths of order 4, peaks kept
    assert F.narayana(4, 2) == 6 == brute_dyck(4, 5, 2)
    assert F.catalan(3) == 5
    assert F.delta_divides(2, 5) == 0
    assert F.delta_divides(2, 4) == 1
    assert F.delta_divides("inf", 0) == 1
    assert F.delta_divides("inf", 3) == 0
    assert F.delta_divides(None, 0) == 1


def test_exact_div_asserts():
    assert F.exact_div(12, 4) == 3
    with pytest.raises(ArithmeticError):
        F.exact_div(7, 2)


def test_row_sums_rational_narayana():
    for total in range(2, 17):
        for n in range(1, total):
            m = total - n
            if gcd(n, m) != 1:
                continue
            assert sum(F.d_nm_j(n, m, j) for j in range(1, min(n, m) + 1)) == F.d_nm(n, m)


def test_row_sums_kary():
    for k in range(1, 4):
        for n in range(1, 7):
            assert sum(F.kary_peaks_count(k, n, j) for j in range(1, n + 1)) == F.kary_count(k, n)


def test_kary_peaks_specialises_to_narayana():
    for n in range(1, 11):
        for j in range(1, n + 1):
            assert F.kary_peaks_count(1, n, j) == F.narayana(n, j)


def test_d_nm_j_matches_brute_force_small():
    for total in range(2, 11):
        for n in range(1, total):
            m = total - n
            if gcd(n, m) != 1:
                continue
            for j in range(1, min(n, m) + 1):
                assert F.d_nm_j(n, m, j) == brute_dyck(n, m, j)


@given(st.integers(1, 40), st.integers(1, 40))
def test_divisibility_never_fires_on_coprime(n, m):
    if gcd(n, m) != 1:
        return
    F.d_nm(n, m)
    for j in range(1, min(n, m) + 1):
        F.d_nm_j(n, m, j)


@given(st.integers(1, 6), st.integers(0, 30))
def test_kary_divisibility(k, n):
    F.kary_count(k, n)
    for j in range(1, n + 1):
        F.kary_peaks_count(k, n, j)


def test_big_values_are_exact():
    # 1/(n+m) C(n+m, n) far past 64 bits
    value = F.d_nm(101, 200)
    assert value * 301 == F.binomial(301, 101)
    assert value > 2**200
