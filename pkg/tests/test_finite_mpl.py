from __future__ import annotations

from fractions import Fraction as F
from itertools import combinations_with_replacement

import pytest
from hypothesis import given
from hypothesis import strategies as st

from mpldual.exact_series import li_truncated, ss_sides
from mpldual.finite_mpl import (ModPrimePower, ModularError, check_fmpl_duality, check_fmzv_duality,
                                curly_L_A_truncated, duality_pair, is_prime, li_truncated_mod,
                                primes_between)
from mpldual.indices import VarIndex
from mpldual.report import PASS


def star_sum(p, k):
    """Exact rational star sum over ``0 < n_1 <= ... <= n_r < p`` at all-ones arguments."""
    total = F(0)
    for ns in combinations_with_replacement(range(1, p), len(k)):
        t = F(1)
        for n, e in zip(ns, k):
            t /= n ** e
        total += t
    return total


def residue(x, m):
    return x.numerator * pow(x.denominator, -1, m) % m


def test_primes():
    assert primes_between(11, 31) == [11, 13, 17, 19, 23, 29, 31]
    assert not is_prime(1) and is_prime(101)


def test_mod_prime_power():
    a = ModPrimePower.of(F(1, 3), 5, 2)
    assert int(a * 3) == 1
    assert int(a.inverse()) == 3
    with pytest.raises(ModularError):
        ModPrimePower.of(F(1, 5), 5, 2)
    with pytest.raises((ModularError, ZeroDivisionError, ValueError)):
        ModPrimePower(5, 2, 10).inverse()


def test_li_truncated_mod_examples():
    assert li_truncated_mod(5, 1, VarIndex.ones((2,))).to_dict() == {}
    assert li_truncated_mod(5, 2, VarIndex.ones((1,))).to_dict() == {}
    assert li_truncated_mod(3, 1, VarIndex.of(["z"], (1,))).to_dict() == {(1,): 1, (2,): 2}


def test_curly_L_A_reduces_at_M1():
    v = VarIndex.of(["z1", 1], (2, 1))
    a = li_truncated_mod(7, 1, v, True)
    b = li_truncated_mod(7, 1, VarIndex.of([1, 1], (2, 1)), True, variables=("z1",))
    assert curly_L_A_truncated(7, 1, v) == a - b.scale(4)


def test_curly_L_A_p7_M2_by_hand():
    p, m = 7, 49
    expected = residue(F(1, 2) * star_sum(p, (1,)) + p * F(1, 2) * star_sum(p, (1, 1)), m)
    assert curly_L_A_truncated(p, 2, VarIndex.ones((1,))).constant() == expected


def test_curly_L_A_rejects_two():
    with pytest.raises(ValueError):
        curly_L_A_truncated(2, 1, VarIndex.ones((1,)))


def test_duality_pair_shapes():
    lhs, rhs = duality_pair([(2,)], ["1"])
    assert lhs.index == (2,) and rhs.index == (1, 1)
    assert rhs.args[0] == 0


@pytest.mark.parametrize("p", [11, 13, 29])
def test_fmpl_duality_examples(p):
    assert check_fmpl_duality(p, 2, [(1,)], ["z1"]).status == PASS
    assert check_fmpl_duality(p, 2, [(2,)], ["1"]).status == PASS
    assert check_fmpl_duality(p, 2, [(1,), (2,)], ["z1", "z2"]).status == PASS


def test_fmpl_duality_detects_a_wrong_dual():
    # replacing the dual by the index itself must break the congruence
    lhs, _ = duality_pair([(2,)], ["z1"])
    wrong = VarIndex((1 - lhs.args[0],), (2,))
    a = curly_L_A_truncated(11, 2, lhs, variables=("z1",))
    b = curly_L_A_truncated(11, 2, wrong, variables=("z1",))
    assert a.first_difference(b) is not None


@pytest.mark.parametrize("p, M, k", [(11, 2, (1,)), (13, 2, (2,)), (11, 3, (2, 1)), (3, 2, (1, 2))])
def test_fmzv_duality_examples(p, M, k):
    assert check_fmzv_duality(p, M, k).status == PASS


def test_fmzv_rejects_two():
    with pytest.raises(ValueError):
        check_fmzv_duality(2, 1, (1,))


small_index = st.lists(st.integers(1, 2), min_size=1, max_size=3).map(tuple)
primes = st.sampled_from([3, 5, 7, 11, 13, 17, 19, 23, 29, 31])


@given(primes, st.integers(1, 3), small_index,
       st.lists(st.fractions(-3, 3, max_denominator=4), min_size=3, max_size=3), st.booleans())
def test_reduction_compatibility(p, M, k, values, star):
    values = [x for x in values[: len(k)]]
    if any(x.denominator % p == 0 for x in values):
        values = [F(x.numerator) for x in values]
    v = VarIndex.of([str(x) for x in values], k)
    exact_value = li_truncated(p, v, star=star).coefficient(())
    assert li_truncated_mod(p, M, v, star).constant() == residue(exact_value, p ** M)


@given(primes, st.integers(1, 2), small_index)
def test_ss_identity_mod_prime_power(p, M, k):
    lhs, rhs = ss_sides(k, p)
    m = p ** M
    assert lhs.reduce_mod(m) == rhs.reduce_mod(m)


@given(primes, st.integers(1, 2), small_index)
def test_symbolic_reduction(p, M, k):
    names = tuple(f"z{i + 1}" for i in range(len(k)))
    v = VarIndex.of(list(names), k)
    exact_poly = li_truncated(p, v)
    assert li_truncated_mod(p, M, v).to_dict() == exact_poly.reduce_mod(p ** M)
