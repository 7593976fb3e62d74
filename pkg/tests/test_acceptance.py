"""Acceptance criteria, one or more tests per criterion.

Every test carries a ``criterion`` marker; ``conftest.py`` folds the outcomes
into one PASS/FAIL line per criterion at the end of the run.
"""

import io
import time
from math import comb

import pytest

from latpath import formulas
from latpath.bijections_nm import dyck_representative
from latpath.cli import main
from latpath.enumeration import super_count, total_humps, total_peaks
from latpath.harness import run_verify
from latpath.paths import NMWord, PathProfile

C1 = pytest.mark.criterion(1, "hump identity (k+1) sum humps = |SP_n| - delta")
C2 = pytest.mark.criterion(2, "peak identity (k+1) sum peaks = |SP_n| - |SP_{n-a}|")
C3 = pytest.mark.criterion(3, "Dyck and Motzkin specialisations")
C4 = pytest.mark.criterion(4, "psi classes partition SP^0_n into blocks of k+1")
C5 = pytest.mark.criterion(5, "phi is a bijection with both round trips")
C6 = pytest.mark.criterion(6, "hump_shrink is a bijection onto SP^U_{n-a}")
C7 = pytest.mark.criterion(7, "cyclic classes and the Dyck count")
C8 = pytest.mark.criterion(8, "free path counts, rational Narayana and phi-hat")
C9 = pytest.mark.criterion(9, "Dyck to k-ary chain and k-ary counts")
C10 = pytest.mark.criterion(10, "verify output is byte-identical across runs")

FINITE_RANGE = {"k": "1..3", "a": "1..2", "n": "0..10"}
INF_RANGE = {"k": "1..2", "a": "inf", "n": "0..12"}


def assert_all_pass(identity, opts):
    reports = run_verify(identity, opts, timing=False)
    bad = [(r.params, r.lhs, r.rhs) for r in reports if not r.passed]
    assert not bad, f"{identity}: {bad[:5]}"
    return reports


# ------------------------------------------------------------------ 1


@C1
def test_c1_hump_identity_within_budget():
    start = time.perf_counter()
    n_reports = len(assert_all_pass("eq4", FINITE_RANGE)) + len(assert_all_pass("eq4", INF_RANGE))
    elapsed = time.perf_counter() - start
    assert n_reports == 3 * 2 * 11 + 2 * 13
    assert elapsed < 60, f"took {elapsed:.1f}s"


@C1
def test_c1_spot_value():
    prof = PathProfile.ka(2, 1)
    assert 3 * total_humps(prof, 4) == 12 == super_count(prof, 4) - 1


# ------------------------------------------------------------------ 2


@C2
def test_c2_peak_identity_positive_orders():
    assert_all_pass("eq5", {**FINITE_RANGE, "n": "1..10"})
    assert_all_pass("eq5", {**INF_RANGE, "n": "1..12"})


@C2
@pytest.mark.xfail(strict=True, reason="at n = 0 the left side is 0 while |SP_0| - |SP_{-a}| = 1")
def test_c2_peak_identity_at_order_zero():
    assert_all_pass("eq5", {**FINITE_RANGE, "n": "0"})


@C2
def test_c2_spot_value():
    prof = PathProfile.ka(2, 1)
    assert 3 * total_peaks(prof, 4) == 9 == super_count(prof, 4) - super_count(prof, 3)


# ------------------------------------------------------------------ 3


@C3
def test_c3_specialisations():
    assert_all_pass("eq2", {"n": "1..12"})
    assert_all_pass("eq3", {"n": "0..12"})


@C3
@pytest.mark.xfail(strict=True, reason="the empty Dyck path has no peaks but |SP_0(1,inf)| = 1")
def test_c3_dyck_peaks_at_order_zero():
    assert_all_pass("eq2", {"n": "0"})


@C3
def test_c3_motzkin_spot_value():
    prof = PathProfile.ka(1, 1)
    assert 2 * total_humps(prof, 3) == 6 == super_count(prof, 3) - 1


# ------------------------------------------------------------------ 4


@C4
def test_c4_psi_partition_and_divisibility():
    opts = {"k": "1..3", "a": "1..2", "n": "0..8"}
    assert_all_pass("psi-partition", opts)
    assert_all_pass("eq7", opts)


# ------------------------------------------------------------------ 5


@C5
def test_c5_phi_round_trips():
    assert_all_pass("phi-roundtrip", {"k": "1..3", "a": "1..2", "n": "0..8"})
    assert_all_pass("phi-roundtrip", {"rises": "1,2", "a": "1", "n": "0..7"})
    assert_all_pass("sa-corollary", {"rises": "1,2", "a": "1", "n": "0..7"})


# ------------------------------------------------------------------ 6


@C6
def test_c6_shrink_bijection():
    assert_all_pass("shrink-bijection", {"k": "1..3", "a": "1..2", "n": "0..8"})


# ------------------------------------------------------------------ 7


@C7
def test_c7_cyclic_classes():
    assert_all_pass("lemma2-class", {"max_sum": "12"})


@C7
def test_c7_dyck_count():
    reports = assert_all_pass("eq8", {"max_sum": "14"})
    for r in reports:
        n, m = r.params["n"], r.params["m"]
        assert r.lhs * (n + m) == comb(n + m, n)


@C7
def test_c7_spot_values():
    assert formulas.d_nm(2, 3) == 2
    assert dyck_representative(NMWord("DUUDU"))[0] == NMWord("UUDUD")


# ------------------------------------------------------------------ 8


@C8
def test_c8_free_counts_and_phi_hat():
    opts = {"max_sum": "12"}
    for identity in ("eq9", "eq10", "eq11", "phihat-roundtrip"):
        assert_all_pass(identity, opts)


# ------------------------------------------------------------------ 9


@C9
def test_c9_dyck_kary_chain_and_counts():
    opts = {"k": "1..3", "n": "1..4"}
    for identity in ("lemma4-chain", "eq12", "eq13"):
        assert_all_pass(identity, opts)


@C9
def test_c9_spot_values():
    assert formulas.kary_count(2, 2) == 3
    assert [formulas.kary_peaks_count(2, 2, j) for j in (1, 2)] == [1, 2]
    assert formulas.kary_count(1, 3) == 5 == formulas.catalan(3)
    for n in range(1, 11):
        for j in range(1, n + 1):
            assert formulas.kary_peaks_count(1, n, j) == formulas.narayana(n, j)


# ------------------------------------------------------------------ 10


def _verify_output(opts):
    argv = ["verify", "eq4", "--no-timing"]
    for key, value in opts.items():
        argv += [f"--{key}", value]
    out = io.StringIO()
    assert main(argv, out=out) == 0
    return out.getvalue().encode()


@C10
@pytest.mark.parametrize("opts", [FINITE_RANGE, INF_RANGE], ids=["finite-a", "infinite-a"])
def test_c10_verify_is_deterministic(opts):
    first = _verify_output(opts)
    second = _verify_output(opts)
    assert first == second
    assert b'"elapsed_ms": 0' in first
