"""Interpreted twin of the compiled kernel in ``_kernels.pyx``.

Identical contract.  Scalars (``nvars == 0``) run on Python ints; polynomials
use numpy arrays, int64 for moduli below 2**31 and object dtype otherwise.
"""
from __future__ import annotations

from typing import Sequence

import numpy as np

_INT64_SAFE = 2 ** 31


def _mul_affine(h: np.ndarray, c: int, s: int, axis: int | None, m: int) -> np.ndarray:
    if axis is None:
        return h * c % m if c != 1 else h
    out = h * c
    src = [slice(None)] * h.ndim
    dst = [slice(None)] * h.ndim
    src[axis] = slice(None, -1)
    dst[axis] = slice(1, None)
    out[tuple(dst)] += h[tuple(src)] * s
    return out % m


def _scalar(ks: Sequence[int], consts: Sequence[int], N: int, m: int, star: bool) -> int:
    r = len(ks)
    if N <= 0:
        return 0
    if r == 0:
        return 1 % m
    cs = [c % m for c in consts]
    H = [0] * (r + 1)
    prev = [1 % m] + [0] * r
    total = 0
    for n in range(1, N):
        invn = pow(n, -1, m)
        cur = [0] * (r + 1)
        for j in range(1, r + 1):
            c = cs[j - 1]
            if j == 1 or not star:
                H[j] = (H[j] + prev[j - 1]) * c % m
            else:
                H[j] = (cur[j - 1] + H[j] * c) % m
            cur[j] = H[j] * pow(invn, ks[j - 1], m) % m
        total = (total + cur[r]) % m
        prev = cur
    return total


def nested_sum_mod(ks, consts, variables, coefs, nvars, N, modulus, star):
    """Return ``sum_{n<N} G_r(n)`` as a flat array of length ``N**nvars``."""
    m = int(modulus)
    dtype = np.int64 if m < _INT64_SAFE else object
    size = N ** nvars
    if nvars == 0:
        if any(v >= 0 for v in variables):
            raise ValueError("variable argument without variables")
        return np.array([_scalar(list(ks), list(consts), N, m, star)], dtype=dtype)
    result = np.zeros((N,) * nvars, dtype=dtype)
    r = len(ks)
    if N <= 0:
        return result.reshape(size)
    if r == 0:
        result.flat[0] = 1 % m
        return result.reshape(size)
    cs = [int(c) % m for c in consts]
    ss = [int(s) % m for s in coefs]
    axes = [None if v < 0 else int(v) for v in variables]
    zero = np.zeros((N,) * nvars, dtype=dtype)
    H = [zero.copy() for _ in range(r + 1)]
    prev = [zero.copy() for _ in range(r + 1)]
    prev[0].flat[0] = 1 % m
    for n in range(1, N):
        invn = pow(n, -1, m)
        cur = [zero] + [None] * r
        for j in range(1, r + 1):
            if j == 1 or not star:
                H[j] = _mul_affine((H[j] + prev[j - 1]) % m, cs[j - 1], ss[j - 1], axes[j - 1], m)
            else:
                H[j] = (_mul_affine(H[j], cs[j - 1], ss[j - 1], axes[j - 1], m) + cur[j - 1]) % m
            cur[j] = H[j] * pow(invn, ks[j - 1], m) % m
        result = (result + cur[r]) % m
        prev = cur
    return result.reshape(size)
