from __future__ import annotations

import json
from fractions import Fraction as F

import mpmath
import pytest
from hypothesis import given
from hypothesis import strategies as st

from mpldual.indices import NotAdmissibleError, VarIndex
from mpldual.numeric import (HypothesisError, MplDualityInstance, NotConvergentError, build_duality_pair,
                             chen_ode, check_interior, check_methods, check_mpl_duality, check_mzv_duality,
                             check_shuffle_product, default_instances, holder, li_series, li_sh,
                             load_instances, mzv, mzv_sh)
from mpldual.report import PASS
from mpldual.values import GaussianRational, to_mp

D = 40


@pytest.fixture(autouse=True)
def high_precision():
    # oracle arithmetic in the tests must not round to the default 15 digits
    with mpmath.workdps(80):
        yield


def close(a, b, digits=D - 5):
    with mpmath.workdps(digits + 20):
        return abs(mpmath.mpmathify(a) - mpmath.mpmathify(b)) < mpmath.mpf(10) ** (-digits)


def oracle(name):
    with mpmath.workdps(80):
        return {"z2": mpmath.pi ** 2 / 6, "z3": mpmath.zeta(3), "z4": mpmath.pi ** 4 / 90,
                "log2": mpmath.log(2)}[name]


def naive_li(args, ks, terms, dps=80):
    """Nested sum truncated at ``n_r < terms`` by plain layered loops (interior points only)."""
    with mpmath.workdps(dps):
        zs = [to_mp(a) for a in args]
        # layer[n]: sum over chains n_1 < ... < n_j = n of the first j factors
        layer = [mpmath.mpf(1)] + [mpmath.mpf(0)] * (terms - 1)
        for z, k in zip(zs, ks):
            new = [mpmath.mpf(0)] * terms
            acc = mpmath.mpf(0)
            for n in range(1, terms):
                acc = (acc + layer[n - 1]) * z
                new[n] = acc / mpmath.mpf(n) ** k
            layer = new
        return mpmath.fsum(layer)


def test_li_series_examples():
    assert close(li_series(VarIndex.of([F(1, 2)], (1,)), D), oracle("log2"))
    assert li_series(VarIndex((), ()), D) == 1
    assert close(li_series(VarIndex.of([-1], (1,)), D), -oracle("log2"))


def test_li_series_rejects_divergent():
    with pytest.raises(NotConvergentError):
        li_series(VarIndex.of([1], (1,)), D)
    with pytest.raises(NotConvergentError):
        li_series(VarIndex.of([2], (2,)), D)


def test_naive_oracle_sanity():
    assert close(naive_li([F(1, 2)], (1,), 200), oracle("log2"))


@pytest.mark.parametrize("args, ks", [
    ([F(1, 2), F(-1, 2)], (1, 1)),
    ([F(1, 3), F(1, 2)], (2, 1)),
    ([GaussianRational(F(1, 4), F(-1, 3)), F(1, 2)], (1, 2)),
    ([F(1, 2), F(1, 2), F(1, 2)], (1, 1, 2)),
])
def test_li_series_against_naive_sum(args, ks):
    assert close(li_series(VarIndex.of(args, ks), D), naive_li(args, ks, 260))


def test_holder_examples():
    # integral convention: I(e_1 e_0) = -zeta(2)
    assert close(holder((1, 0), D), -oracle("z2"))
    assert close(holder((1, 0, 0), D), -oracle("z3"))
    assert holder((), D) == 1


def test_holder_rejects_letters_on_the_path():
    with pytest.raises(ValueError):
        holder((F(1, 2), 0), D)


def test_mzv_examples():
    assert close(mzv((2,), D), oracle("z2"))
    assert close(mzv((1, 2), D), oracle("z3"))
    with mpmath.workdps(80):
        z22 = (oracle("z2") ** 2 - oracle("z4")) / 2
    assert close(mzv((2, 2), D), z22)
    assert close(mzv((2, 2), D), mpmath.mpf("0.8117424252833536436"), 18)
    assert mzv((), D) == 1
    with pytest.raises(NotAdmissibleError):
        mzv((2, 1), D)


def test_mzv_sh_examples():
    assert mzv_sh((1,), D) == 0
    assert mzv_sh((1, 1), D) == 0
    assert close(mzv_sh((1, 2), D), oracle("z3"))
    assert close(mzv_sh((2, 1), D), -2 * oracle("z3"))


def test_chen_ode_examples():
    assert close(chen_ode((1, 0), D), holder((1, 0), D))
    assert close(chen_ode((2,), D), -oracle("log2"))
    assert chen_ode((), D) == 1


def test_li_sh_regularizes_trailing_ones():
    assert li_sh(VarIndex.of([1], (1,)), D) == 0
    assert close(li_sh(VarIndex.of([1, 1], (2, 1)), D), mzv_sh((2, 1), D))
    assert li_sh(VarIndex.of([0, 1], (1, 1)), D) == 0


@pytest.mark.parametrize("ell", [(1,), (1, 1), (2, 1)])
def test_mzv_sh_is_the_log_constant_term(ell):
    zs = [F(1, 10 ** 10), F(1, 10 ** 12), F(1, 10 ** 14)]
    with mpmath.workdps(50):
        vals = [mpmath.re(li_series(VarIndex.of([1 - z] * len(ell), ell), 30)) for z in zs]
        xs = [mpmath.log(mpmath.mpf(z.numerator) / z.denominator) for z in zs]
        A = mpmath.matrix([[x ** j for j in range(3)] for x in xs])
        const = mpmath.lu_solve(A, mpmath.matrix(vals))[0]
        bound = 100 * mpmath.mpf(10) ** -10 * abs(xs[0]) ** len(ell)
        assert abs(const - mzv_sh(ell, 30)) < bound


def test_precision_doubling():
    for k in [(2,), (1, 3), (2, 1, 2)]:
        assert close(mzv(k, 30), mzv(k, 40), 28)
    v = VarIndex.of([GaussianRational(F(-1, 2), F(1, 2)), 1], (1, 2))
    assert close(li_series(v, 30), li_series(v, 40), 28)


def test_build_duality_pair_examples():
    lhs, rhs, sign = build_duality_pair(MplDualityInstance.of([(1, 2)]))
    assert (lhs.index, rhs.index, sign) == ((1, 2), (3,), 1)
    assert lhs.args == (1, 1) and rhs.args == (1,)
    inst = MplDualityInstance.of([(), ()], [1], [1], [-1], strict=False)
    lhs, rhs, sign = build_duality_pair(inst)
    assert (lhs, rhs, sign) == (VarIndex.of([-1], (1,)), VarIndex.of([F(1, 2)], (1,)), -1)
    lhs, rhs, sign = build_duality_pair(MplDualityInstance.of([(), ()], [1], [2], [-1]))
    assert lhs == VarIndex.of([-1], (2,))
    assert rhs == VarIndex.of([1, F(1, 2)], (1, 1)) and sign == -1


def test_hypotheses_enforced():
    with pytest.raises(HypothesisError, match="condition 3"):
        build_duality_pair(MplDualityInstance.of([(), ()], [1], [1], [-1]))
    with pytest.raises(HypothesisError, match="condition 1"):
        build_duality_pair(MplDualityInstance.of([(2,), ()], [1], [1], [F(3, 4)]))
    with pytest.raises(HypothesisError, match="condition 2"):
        build_duality_pair(MplDualityInstance.of([(), (2,)], [1], [1], [GaussianRational(F(1, 2), F(1, 2))]))
    with pytest.raises(HypothesisError, match="admissible"):
        build_duality_pair(MplDualityInstance.of([(2, 1)]))


def test_mpl_duality_examples():
    assert check_mpl_duality(MplDualityInstance.of([(2,)]), 30).status == PASS
    r = check_mpl_duality(MplDualityInstance.of([(), ()], [1], [1], [-1], strict=False), 40)
    assert r.status == PASS
    assert close(mpmath.mpf(r.details["lhs"]["value"]), -oracle("log2"), 35)
    half_i = GaussianRational(F(-1, 2), F(1, 2))
    assert check_mpl_duality(MplDualityInstance.of([(2,), ()], [1], [2], [half_i]), 30).status == PASS


def test_mpl_duality_detects_wrong_sign():
    inst = MplDualityInstance.of([(2,), ()], [1], [2], [F(-1, 3)])
    lhs, rhs, sign = build_duality_pair(inst)
    assert not close(li_series(lhs, 30), -sign * li_series(rhs, 30), 10)


def test_instance_file_round_trip(tmp_path):
    path = tmp_path / "inst.json"
    path.write_text(json.dumps([i.to_dict() for i in default_instances()]))
    assert load_instances(str(path)) == default_instances()
    one = {"l": ["2", "-"], "a": [1], "b": [2], "w": ["-1/2+1/2 i"]}
    path.write_text(json.dumps(one))
    assert load_instances(str(path))[0].w[0] == GaussianRational(F(-1, 2), F(1, 2))


@pytest.mark.parametrize("k", [(2,), (1, 2), (1, 1, 2), (2, 3)])
def test_mzv_duality(k):
    assert check_mzv_duality(k, 30).status == PASS


def test_crosschecks_small():
    assert check_methods((1, 0, 0), 30).status == PASS
    assert check_interior(VarIndex.of([F(1, 2), F(-1, 2)], (1, 1)), 30).status == PASS
    assert check_shuffle_product((1, 0), (-1, 0), 30).status == PASS


letter = st.sampled_from([F(1), F(-1), F(2), F(0), F(3, 2)])


@given(st.lists(letter, min_size=1, max_size=3))
def test_shuffle_law_property(w):
    w = tuple(w)
    if w[0] == 0 or w[-1] == 1:
        return
    assert check_shuffle_product(w, (F(-1), 0), 25).status == PASS
