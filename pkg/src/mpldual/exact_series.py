"""Exact truncated multiple polylogarithms and identities between them.

Every check here compares canonical polynomial forms in ``Q[z_1, ..., z_r]``;
nothing is ever evaluated at sample points.
"""
from __future__ import annotations

import time
from fractions import Fraction
from itertools import combinations, combinations_with_replacement
from math import comb
from typing import Any, Sequence

from .indices import Index, VarIndex, as_index, format_index, ones, star_expansion
from .nested import brute_force_sum, nested_layers
from .polynomials import RationalPolynomial, variables_of
from .report import FAIL, PASS, VerificationReport, stamp
from .series import TruncatedSeries, geometric_tail
from .values import GaussianRational, exact, is_symbolic


def symbols(r: int, prefix: str = "z") -> tuple[str, ...]:
    return tuple(f"{prefix}{i}" for i in range(1, r + 1))


def _as_poly(x: Any, variables: tuple[str, ...]) -> RationalPolynomial:
    if isinstance(x, RationalPolynomial):
        return x.with_variables(variables + tuple(v for v in x.variables if v not in variables))
    if isinstance(x, str):
        x = exact(x)
    if is_symbolic(x):
        return RationalPolynomial.var(str(x), variables)
    x = exact(x)
    if isinstance(x, GaussianRational):
        raise TypeError("exact truncated sums take rational or symbolic arguments")
    return RationalPolynomial.constant(x, variables)


def _ring(v: VarIndex) -> tuple[list[Any], Any]:
    """Arguments in the smallest ring that holds them: Fractions, or polynomials."""
    names = variables_of([exact(a) if isinstance(a, str) else a for a in v.args])
    if not names:
        return [Fraction(exact(a)) for a in v.args], Fraction(1)
    return [_as_poly(a, names) for a in v.args], RationalPolynomial.constant(1, names)


def _to_poly(x: Any) -> RationalPolynomial:
    return x if isinstance(x, RationalPolynomial) else RationalPolynomial.constant(x)


def li_truncated(N: int, v: VarIndex, *, star: bool = False) -> RationalPolynomial:
    """``Li_{<N}(z; k)``: the finite sum over ``0 < n_1 < ... < n_r < N`` (``<=`` between the n's when ``star``)."""
    if N < 1:
        raise ValueError("N must be >= 1")
    args, one = _ring(v)
    total = one - one
    for g in nested_layers(v.index, args, N, star=star, one=one):
        total = total + g
    return _to_poly(total)


def li_star_truncated(N: int, v: VarIndex) -> RationalPolynomial:
    return li_truncated(N, v, star=True)


def lattice_sum(N: int, v: VarIndex, *, star: bool = False) -> RationalPolynomial:
    """Brute-force enumeration of the same finite sum (independent oracle)."""
    args, one = _ring(v)
    return _to_poly(brute_force_sum(v.index, args, N, star=star, one=one))


def _first_difference(diff: RationalPolynomial) -> Any:
    if diff.is_zero():
        return None
    mono, c = diff.sorted_terms()[0]
    return {"monomial": list(mono), "variables": list(diff.variables), "difference": str(c)}


def _params(v: VarIndex, **extra: Any) -> dict[str, Any]:
    out = {"index": format_index(v.index), "args": [str(a) for a in v.args]}
    out.update(extra)
    return out


def check_star_nonstar(N: int, v: VarIndex, *, brute_force: bool = True) -> VerificationReport:
    """Star value against the sum of non-star contractions (and against lattice enumeration)."""
    start = time.perf_counter()
    star = li_star_truncated(N, v)
    expanded = RationalPolynomial()
    for term in star_expansion(v):
        expanded = expanded + li_truncated(N, term)
    diff = star - expanded
    details: dict[str, Any] = {"terms": len(star.terms)}
    witness = _first_difference(diff)
    if brute_force and witness is None:
        oracle_diff = star - lattice_sum(N, v, star=True)
        witness = _first_difference(oracle_diff)
        details["brute_force"] = True
    status = PASS if witness is None else FAIL
    return stamp(VerificationReport("star-expansion", _params(v, N=N), status,
                                    residual=str(diff), witness=witness, details=details), start)


def _coefficients_by_last(v: VarIndex, order: int, star: bool) -> list[Any]:
    """Coefficient of ``X^j`` in ``Li(Xz; k)`` for ``j < order``: lattice points with ``n_r = j``."""
    args, one = _ring(v)
    r = v.depth
    zero = one - one
    out = []
    for j in range(order):
        if r == 0:
            out.append(one if j == 0 else zero)
            continue
        acc = zero
        if j >= 1:
            heads = (combinations_with_replacement(range(1, j + 1), r - 1) if star
                     else combinations(range(1, j), r - 1))
            for head in heads:
                ns = head + (j,)
                term = one
                prevn = 0
                for z, k, n in zip(args, v.index, ns):
                    term = term * (z ** (n - prevn)) * Fraction(1, n ** k)
                    prevn = n
                acc = acc + term
        out.append(acc)
    return out


def check_generating_function(v: VarIndex, M: int) -> VerificationReport:
    """``sum_{N=1}^{M} Li_{<N}(v) X^N`` against ``X/(1-X) Li(Xz; k)`` up to ``X^M``, star and non-star."""
    start = time.perf_counter()
    witness = None
    for star in (False, True):
        if M == 0:
            break
        args, one = _ring(v)
        zero = one - one
        lhs = [zero] + [nested_sum_to(v, N, star) for N in range(1, M + 1)]
        inner = TruncatedSeries(_coefficients_by_last(v, M + 1, star), "X")
        rhs = geometric_tail(M + 1, one, "X") * inner
        for N in range(M + 1):
            if lhs[N] != rhs[N]:
                witness = {"star": star, "N": N, "lhs": str(lhs[N]), "rhs": str(rhs[N])}
                break
        if witness:
            break
    status = PASS if witness is None else FAIL
    return stamp(VerificationReport("genfun", _params(v, order=M), status, witness=witness), start)


def nested_sum_to(v: VarIndex, N: int, star: bool) -> Any:
    args, one = _ring(v)
    total = one - one
    for g in nested_layers(v.index, args, N, star=star, one=one):
        total = total + g
    return total


def ss_sides(k: Sequence[int], N: int) -> tuple[RationalPolynomial, RationalPolynomial]:
    """Both sides of the Sakugawa-Seki identity in ``Q[z_1, ..., z_r]``.

    Left: the star sum weighted by ``(-1)^{n_r} C(N-1, n_r)``.  Right: the
    difference of two star values at the arguments ``1 - z_i`` padded with ones.
    """
    k = as_index(k)
    r = len(k)
    if r == 0:
        raise ValueError("the identity needs depth >= 1")
    names = symbols(r)
    one = RationalPolynomial.constant(1, names)
    zs = [RationalPolynomial.var(n, names) for n in names]
    layers = nested_layers(k, zs, N, star=True, one=one)
    lhs = one - one
    binom = 1
    for n, g in enumerate(layers):
        if n:
            binom = binom * (N - n) // n  # C(N-1, n) from C(N-1, n-1)
            lhs = lhs + g * ((-1) ** n * binom)
    wt = sum(k)
    first: list[Any] = []
    second: list[Any] = []
    for i, (z, ki) in enumerate(zip(zs, k)):
        first.extend([one - z] + [one] * (ki - 1))
        second.extend(([one] * ki) if i == 0 else ([one - z] + [one] * (ki - 1)))
    idx = ones(wt)
    rhs = one - one
    for g in nested_layers(idx, first, N, star=True, one=one):
        rhs = rhs + g
    for g in nested_layers(idx, second, N, star=True, one=one):
        rhs = rhs - g
    return lhs, rhs


def ss_lhs_direct(k: Sequence[int], N: int) -> RationalPolynomial:
    """Left side of the identity by lattice enumeration with exact binomials."""
    k = as_index(k)
    names = symbols(len(k))
    zs = [RationalPolynomial.var(n, names) for n in names]
    total = RationalPolynomial(names)
    for ns in combinations_with_replacement(range(1, N), len(k)):
        term = RationalPolynomial.constant((-1) ** ns[-1] * comb(N - 1, ns[-1]), names)
        prevn = 0
        for z, ki, n in zip(zs, k, ns):
            term = term * (z ** (n - prevn)) * Fraction(1, n ** ki)
            prevn = n
        total = total + term
    return total


def check_ss_identity(k: Sequence[int], N: int) -> VerificationReport:
    start = time.perf_counter()
    k = as_index(k)
    lhs, rhs = ss_sides(k, N)
    diff = lhs - rhs
    witness = _first_difference(diff)
    return stamp(VerificationReport("ss", {"index": format_index(k), "N": N},
                                    PASS if witness is None else FAIL,
                                    residual=str(diff), witness=witness,
                                    details={"terms": len(lhs.terms)}), start)
