"""Every acceptance criterion at its stated tolerance and scale; one summary line each."""
from __future__ import annotations

import time
from contextlib import contextmanager

import mpmath
import pytest

from conftest import ACCEPTANCE
from mpldual import exact_series, numeric, symmetric
from mpldual.finite_mpl import check_fmzv_duality, check_fmpl_duality, primes_between
from mpldual.indices import VarIndex, compositions, dagger, indices_up_to, is_admissible, vee, weight
from mpldual.report import PASS
from mpldual.suites import RunConfig, finite_groups, run_suite
from mpldual.words import index_to_word, word_dual


@contextmanager
def criterion(label, budget):
    start = time.perf_counter()
    note = ""
    try:
        yield
        elapsed = time.perf_counter() - start
        note = f"{elapsed:.1f}s (budget {budget}s)"
        assert elapsed <= budget, f"took {elapsed:.1f}s, budget {budget}s"
        ACCEPTANCE.append((label, "PASS", note))
    except BaseException as exc:
        ACCEPTANCE.append((label, "FAIL", note or f"{type(exc).__name__}: {str(exc).splitlines()[0][:120]}"))
        raise


def statuses(reports):
    return [r.status for r in reports]


def test_criterion_01_ss_identity():
    with criterion("1", 120):
        reports = list(run_suite(RunConfig(max_weight=6, max_depth=3, max_n=12), "ss"))
        assert len(reports) == len(indices_up_to(6, 3)) * 12
        assert set(statuses(reports)) == {PASS}


def test_criterion_02_star_nonstar():
    with criterion("2", 60):
        reports = list(run_suite(RunConfig(max_weight=5, max_n=20), "star-expansion"))
        assert len(reports) == len(indices_up_to(5)) * 20
        assert all(r.details.get("brute_force") for r in reports)
        assert set(statuses(reports)) == {PASS}


def test_criterion_03_generating_function():
    with criterion("3", 60):
        reports = list(run_suite(RunConfig(order=15), "genfun"))
        assert len(reports) == 10
        assert set(statuses(reports)) == {PASS}


def test_criterion_04_mzv_duality():
    with criterion("4", 300):
        reports = list(run_suite(RunConfig(digits=40, max_weight=8), "mzv-duality"))
        assert len(reports) == 127
        assert set(statuses(reports)) == {PASS}
        assert max(mpmath.mpf(r.residual) for r in reports) < mpmath.mpf(10) ** -30


def test_criterion_05_complex_duality():
    with criterion("5", 120):
        insts = numeric.default_instances()
        closed = insts[0]
        r = numeric.check_mpl_duality(closed, 40)
        with mpmath.workdps(60):
            log2 = mpmath.log(2)
            for side in ("lhs", "rhs"):
                value = mpmath.mpf(r.details[side]["value"]) * (r.details["sign"] if side == "rhs" else 1)
                assert abs(value + log2) < mpmath.mpf(10) ** -30
        assert mpmath.mpf(r.residual) < mpmath.mpf(10) ** -30
        others = [numeric.check_mpl_duality(i, 40) for i in insts[1:]]
        nontrivial = [i for i in insts[1:] if i.d >= 2 or len(i.l[0]) >= 2]
        assert len(nontrivial) >= 5
        assert any(str(w) == "-1/2+1/2i" for i in insts for w in i.w)
        assert any(i.d >= 2 and any(i.l) for i in insts)
        for rep in others:
            assert rep.status == PASS
            assert mpmath.mpf(rep.residual) < mpmath.mpf(10) ** -25


def _finite_failures(primes):
    fails = []
    for p in primes:
        for M in (1, 2, 3):
            for k in indices_up_to(4):
                if check_fmzv_duality(p, M, k).status != PASS:
                    fails.append(("fmzv", p, M, k))
                for z in ("0", "1", "2", "-1", "1/2"):
                    if check_fmpl_duality(p, M, [k], [z]).status != PASS:
                        fails.append(("fmpl", p, M, k, z))
        for ks in finite_groups(3, 2):
            zs = [f"z{i + 1}" for i in range(len(ks))]
            if check_fmpl_duality(p, 2, list(ks), zs).status != PASS:
                fails.append(("fmpl-symbolic", p, 2, ks))
    return fails


def test_criterion_06_finite_duality():
    with criterion("6", 600):
        window = primes_between(11, 101)
        assert window[0] == 11 and window[-1] == 101 and len(window) == 22
        assert _finite_failures(window) == []
    # primes below the window, recorded rather than required
    small = _finite_failures([3, 5, 7])
    ACCEPTANCE.append(("6.small-primes", "PASS" if not small else "NOTE", f"failures below 11: {small}"))


def test_criterion_07_smzv_duality():
    with criterion("7", 900):
        reports = list(run_suite(RunConfig(digits=60, max_weight=5, t_order=3, height=10 ** 6), "smzv-duality"))
        assert len(reports) == len(indices_up_to(5))
        assert set(statuses(reports)) == {PASS}
        tol = mpmath.mpf(10) ** -50
        with mpmath.workdps(80):
            assert abs(symmetric.zeta_S_sh((2,), 1, 60)[0] - 2 * mpmath.zeta(2)) < tol
            s = symmetric.zeta_S_sh((1,), 6, 60)
            assert abs(s[0]) < tol
            assert all(abs(s[n] + mpmath.zeta(n + 1)) < tol for n in range(1, 6))


def test_criterion_07_anchor_zeta_S_one_one():
    # stated anchor: the t^0 coefficient of zeta_S^sh(1,1) equals -zeta(2)
    with criterion("7.anchor-(1,1)", 60):
        with mpmath.workdps(80):
            value = symmetric.zeta_S_sh((1, 1), 1, 60)[0]
            assert abs(value + mpmath.zeta(2)) < mpmath.mpf(10) ** -50, f"computed {mpmath.nstr(value, 10)}"


def test_criterion_08_main_theorem():
    with criterion("8", 300):
        reports = list(run_suite(RunConfig(digits=60, t_order=3, max_weight=3, max_depth=2), "main"))
        assert reports and set(statuses(reports)) == {PASS}
        assert any("0" in r.params["args"] for r in reports)
        for k in [(1,), (2,), (1, 2), (2, 1), (1, 1, 1)]:
            main_r = symmetric.check_main_theorem(0, [k], [1], 3, 60)
            smzv_r = symmetric.check_smzv_duality(k, 3, 60)
            assert main_r.status == smzv_r.status == PASS
            for a, b in zip(main_r.details["difference"], smzv_r.details["D"]):
                with mpmath.workdps(80):
                    assert abs(2 * mpmath.mpf(a) - mpmath.mpf(b)) < mpmath.mpf(10) ** -50


def test_criterion_09_cross_method():
    with criterion("9", 300):
        reports = list(run_suite(RunConfig(digits=40), "crosschecks"))
        methods = [r for r in reports if r.check == "crosscheck-methods"]
        interior = [r for r in reports if r.check == "crosscheck-interior"]
        shuffles = [r for r in reports if r.check == "crosscheck-shuffle"]
        assert len(methods) == len(numeric.mzv_duality_indices(6))
        assert len(interior) >= 9 and len(shuffles) == 20
        assert set(statuses(reports)) == {PASS}
        assert max(mpmath.mpf(r.residual) for r in methods + interior) < mpmath.mpf(10) ** -35
        assert max(mpmath.mpf(r.residual) for r in shuffles) < mpmath.mpf(10) ** -32


def test_criterion_10_involutions():
    with criterion("10", 60):
        for w in range(0, 11):
            for k in compositions(w):
                if k:
                    assert vee(vee(k)) == k and weight(vee(k)) == w
                if is_admissible(k):
                    d = dagger(k)
                    assert dagger(d) == k and weight(d) == w
                    assert index_to_word(VarIndex.ones(d)) == word_dual(index_to_word(VarIndex.ones(k)))
