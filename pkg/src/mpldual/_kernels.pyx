# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled nested truncated sums modulo an integer below 2**31.

Same layered recurrence as ``mpldual.nested`` but over dense coefficient
arrays: a polynomial in ``nvars`` variables of degree < N in each one is a
flat C-ordered array of length ``N**nvars``.  Each argument is the affine
form ``const + coef * z_var`` (``var = -1`` for a constant).  One fused pass
per (n, depth) updates the running sum and the layer value.
"""
import numpy as np

from libc.stdint cimport int64_t


cdef inline int64_t _mod(int64_t a, int64_t m) noexcept nogil:
    a %= m
    return a + m if a < 0 else a


cdef int64_t _inverse(int64_t a, int64_t m) except -1:
    cdef int64_t t = 0, new_t = 1, r = m, new_r = a % m, q, tmp
    while new_r != 0:
        q = r // new_r
        tmp = t - q * new_t
        t = new_t
        new_t = tmp
        tmp = r - q * new_r
        r = new_r
        new_r = tmp
    if r != 1:
        raise ValueError(f"{a} is not invertible modulo {m}")
    return _mod(t, m)


cdef void _step(int64_t* H, const int64_t* add, int64_t* out, bint strict,
                int64_t c, int64_t s, Py_ssize_t stride, Py_ssize_t N, Py_ssize_t size,
                int64_t ip, int64_t m) noexcept nogil:
    # strict: H <- (c + s z)(H + add);  weak: H <- (c + s z) H + add;  then out <- ip * H
    cdef Py_ssize_t block, base, e, t, i
    cdef int64_t a, b, h
    if stride == 0:
        for i in range(size):
            if strict:
                a = H[i] + add[i]
                if a >= m:
                    a -= m
                h = (a * c) % m
            else:
                h = (H[i] * c) % m + add[i]
                if h >= m:
                    h -= m
            H[i] = h
            out[i] = (h * ip) % m
        return
    block = stride * N
    base = 0
    while base < size:
        for e in range(N - 1, -1, -1):
            for t in range(stride):
                i = base + e * stride + t
                if strict:
                    a = H[i] + add[i]
                    if a >= m:
                        a -= m
                    if e:
                        b = H[i - stride] + add[i - stride]
                        if b >= m:
                            b -= m
                        h = (a * c + b * s) % m
                    else:
                        h = (a * c) % m
                else:
                    if e:
                        h = (H[i] * c + H[i - stride] * s) % m
                    else:
                        h = (H[i] * c) % m
                    h += add[i]
                    if h >= m:
                        h -= m
                H[i] = h
                out[i] = (h * ip) % m
        base += block


def nested_sum_mod(ks, consts, variables, coefs, int nvars, Py_ssize_t N, int64_t modulus, bint star):
    """Return ``sum_{n<N} G_r(n)`` as a flat int64 array of length ``N**nvars``."""
    cdef Py_ssize_t r = len(ks), size = N ** nvars, j, n, i, q
    cdef int64_t m = modulus, ip, invn
    if m < 1 or m >= 2 ** 31:
        raise ValueError("modulus must lie in [1, 2**31)")
    result = np.zeros(size, dtype=np.int64)
    cdef int64_t[::1] res = result
    if N <= 0:
        return result
    if r == 0:
        res[0] = 1 % m
        return result
    cdef int64_t[::1] k_ = np.asarray(ks, dtype=np.int64)
    cdef int64_t[::1] c_ = np.asarray([_mod(c, modulus) for c in consts], dtype=np.int64)
    cdef int64_t[::1] s_ = np.asarray([_mod(s, modulus) for s in coefs], dtype=np.int64)
    cdef Py_ssize_t[::1] stride_ = np.zeros(r, dtype=np.intp)
    for j in range(r):
        stride_[j] = 0 if variables[j] < 0 else N ** (nvars - 1 - variables[j])
    cdef int64_t[:, ::1] H = np.zeros((r + 1, size), dtype=np.int64)
    cdef int64_t[:, ::1] prev = np.zeros((r + 1, size), dtype=np.int64)
    cdef int64_t[:, ::1] cur = np.zeros((r + 1, size), dtype=np.int64)
    cdef int64_t[:, ::1] swap
    prev[0, 0] = 1 % m
    with nogil:
        for n in range(1, N):
            with gil:
                invn = _inverse(n, m)
            for i in range(size):
                cur[0, i] = 0
            for j in range(1, r + 1):
                ip = 1
                for q in range(k_[j - 1]):
                    ip = (ip * invn) % m
                if j == 1 or not star:
                    _step(&H[j, 0], &prev[j - 1, 0], &cur[j, 0], True, c_[j - 1], s_[j - 1],
                          stride_[j - 1], N, size, ip, m)
                else:
                    _step(&H[j, 0], &cur[j - 1, 0], &cur[j, 0], False, c_[j - 1], s_[j - 1],
                          stride_[j - 1], N, size, ip, m)
            for i in range(size):
                res[i] = res[i] + cur[r, i]
                if res[i] >= m:
                    res[i] -= m
            swap = prev
            prev = cur
            cur = swap
    return result
