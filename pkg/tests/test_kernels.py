from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from mpldual import kernels

needs_compiled = pytest.mark.skipif("cython" not in kernels.available_backends(),
                                    reason="compiled kernel not built")


def test_backend_selected():
    assert kernels.BACKEND in kernels.available_backends()


def test_unknown_backend():
    with pytest.raises(ValueError):
        kernels.backend_module("fortran")


def test_python_kernel_scalar_harmonic():
    # H_4 = 25/12 vanishes mod 25
    out = kernels.nested_sum_mod([1], [1], [-1], [0], 0, 5, 25, False, backend="python")
    assert int(np.asarray(out)[0]) == 0


@needs_compiled
@given(st.lists(st.integers(1, 3), min_size=1, max_size=4), st.integers(0, 2), st.sampled_from([7, 11, 13, 49, 121]),
       st.booleans(), st.data())
def test_backends_agree(ks, nvars, modulus, star, data):
    r = len(ks)
    consts = data.draw(st.lists(st.integers(-5, 5), min_size=r, max_size=r))
    variables = data.draw(st.lists(st.integers(-1, nvars - 1), min_size=r, max_size=r))
    coefs = data.draw(st.lists(st.integers(-3, 3), min_size=r, max_size=r))
    N = data.draw(st.integers(1, 7))  # every n < N must be invertible
    args = (ks, consts, variables, coefs, nvars, N, modulus, star)
    py = np.asarray(kernels.nested_sum_mod(*args, backend="python"), dtype=np.int64)
    cy = np.asarray(kernels.nested_sum_mod(*args, backend="cython"), dtype=np.int64)
    assert np.array_equal(py, cy)


@needs_compiled
def test_large_modulus_falls_back():
    m = 2 ** 61 - 1
    out = kernels.nested_sum_mod([1], [1], [-1], [0], 0, 10, m, False, backend="cython")
    assert int(np.asarray(out, dtype=object)[0]) % m == sum(pow(n, -1, m) for n in range(1, 10)) % m
