from __future__ import annotations

from fractions import Fraction as F
from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from mpldual.exact_series import (check_generating_function, check_ss_identity, check_star_nonstar,
                                  lattice_sum, li_star_truncated, li_truncated, ss_lhs_direct, ss_sides,
                                  symbols)
from mpldual.indices import VarIndex
from mpldual.polynomials import RationalPolynomial
from mpldual.report import PASS


def poly(var, terms):
    return RationalPolynomial((var,), {(e,): c for e, c in terms.items()})


def test_li_truncated_examples():
    assert li_truncated(3, VarIndex.of(["z"], (2,))) == poly("z", {1: 1, 2: F(1, 4)})
    assert li_truncated(1, VarIndex.of(["z"], (1,))).is_zero()
    assert li_truncated(5, VarIndex.of([1], (1,))) == F(25, 12)
    assert li_truncated(4, VarIndex((), ())) == 1


def test_li_star_truncated_examples():
    # the only lattice point is n1 = n2 = 1, contributing z1^1 z2^0
    v = VarIndex.of(["z1", "z2"], (1, 1))
    assert li_star_truncated(2, v) == RationalPolynomial(("z1", "z2"), {(1, 0): 1})
    assert li_star_truncated(3, VarIndex.of([1, 1], (1, 1))) == F(7, 4)
    w = VarIndex.of(["z"], (3,))
    for N in range(1, 7):
        assert li_star_truncated(N, w) == li_truncated(N, w)


def test_lattice_sum_agrees_on_mixed_arguments():
    v = VarIndex.of(["1/2", "z1", "3"], (1, 2, 1))
    for star in (False, True):
        assert lattice_sum(8, v, star=star) == li_truncated(8, v, star=star)


@pytest.mark.parametrize("N, args, k", [
    (6, ["z1", "z2"], (1, 2)),
    (1, ["z1"], (2,)),
    (10, ["z1", "z2", "z3"], (1, 1, 1)),
])
def test_star_nonstar_examples(N, args, k):
    r = check_star_nonstar(N, VarIndex.of(args, k))
    assert r.status == PASS
    assert r.residual == "0"


@pytest.mark.parametrize("args, k, M", [(["1"], (2,), 6), (["1/2", "1/3"], (1, 1), 8), (["z1"], (1,), 0)])
def test_generating_function_examples(args, k, M):
    assert check_generating_function(VarIndex.of(args, k), M).status == PASS


@pytest.mark.parametrize("k, N", [((1,), 2), ((2,), 4), ((1, 1), 5)])
def test_ss_examples(k, N):
    assert check_ss_identity(k, N).status == PASS


def test_ss_smallest_case_by_hand():
    lhs, rhs = ss_sides((1,), 2)
    z = poly("z1", {1: -1})
    assert lhs == z and rhs == z


@pytest.mark.parametrize("k", [(1, 2), (2, 1, 1), (3,)])
def test_ss_lhs_matches_direct_enumeration(k):
    for N in range(1, 8):
        assert ss_sides(k, N)[0] == ss_lhs_direct(k, N)


def _last_layer(N, v):
    """Lattice terms with ``n_r = N`` by plain enumeration."""
    names = symbols(len(v.index))
    zs = [RationalPolynomial.var(n, names) for n in names]
    total = RationalPolynomial(names)
    for head in combinations(range(1, N), len(v.index) - 1):
        ns = head + (N,)
        term = RationalPolynomial.constant(1, names)
        prev = 0
        for z, k, n in zip(zs, v.index, ns):
            term = term * z ** (n - prev) * F(1, n ** k)
            prev = n
        total = total + term
    return total


small_index = st.lists(st.integers(1, 2), min_size=1, max_size=3).map(tuple)


@given(small_index, st.integers(1, 10))
def test_prefix_consistency(k, N):
    v = VarIndex.of(list(symbols(len(k))), k)
    assert li_truncated(N + 1, v) - li_truncated(N, v) == _last_layer(N, v)


@given(small_index, st.integers(1, 9), st.lists(st.fractions(-2, 2, max_denominator=5), min_size=3, max_size=3))
def test_specialization_commutes(k, N, values):
    names = symbols(len(k))
    sym = li_truncated(N, VarIndex.of(list(names), k))
    num = li_truncated(N, VarIndex.of([str(x) for x in values[: len(k)]], k))
    assert sym.evaluate(dict(zip(names, values))) == num.coefficient(())


@given(small_index, st.integers(1, 9))
def test_star_nonstar_property(k, N):
    assert check_star_nonstar(N, VarIndex.of(list(symbols(len(k))), k)).status == PASS
