"""t-adic symmetric multiple zeta values and polylogarithms as truncated t-series."""
from __future__ import annotations

import time
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import comb
from typing import Any, Sequence

import mpmath

from .finite_mpl import duality_pair
from .indices import EmptyIndexError, Index, VarIndex, as_index, format_index, star_expansion, vee
from .numeric import NotConvergentError, li_sh, mzv_sh, working_dps
from .relations import RelationCertificate, zeta2_membership
from .report import FAIL, INCONCLUSIVE, PASS, UNSUPPORTED, VerificationReport, stamp
from .series import TruncatedSeries
from .values import abs2, exact, is_symbolic, to_mp


class UnsupportedDomainError(NotConvergentError):
    """A ratio argument needed by the symmetric polylogarithm is outside the convergent domain."""


class TSeries(TruncatedSeries):
    """Truncated series in ``t`` whose n-th coefficient has weight ``base_weight + n``."""

    __slots__ = ("base_weight",)

    def __init__(self, coeffs, base_weight: int | None = None, var: str = "t"):
        super().__init__(coeffs, var)
        self.base_weight = base_weight

    def weight(self, n: int) -> int | None:
        return None if self.base_weight is None else self.base_weight + n

    def _wrap(self, s: TruncatedSeries, base: int | None) -> "TSeries":
        return TSeries(s.coeffs, base, self.var)

    def _same(self, other: Any) -> int | None:
        ob = getattr(other, "base_weight", None)
        return self.base_weight if ob is None or ob == self.base_weight else None

    def __add__(self, other):
        return self._wrap(TruncatedSeries.__add__(self, other), self._same(other))

    def __sub__(self, other):
        return self._wrap(TruncatedSeries.__sub__(self, other), self._same(other))

    def __neg__(self):
        return self._wrap(TruncatedSeries.__neg__(self), self.base_weight)

    def scale(self, c):
        return self._wrap(TruncatedSeries.scale(self, c), self.base_weight)

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            ob = getattr(other, "base_weight", None)
            base = None if self.base_weight is None or ob is None else self.base_weight + ob
            return self._wrap(TruncatedSeries.__mul__(self, other), base)
        return self.scale(other)

    def shift(self, n: int):
        base = None if self.base_weight is None else self.base_weight - n
        return self._wrap(TruncatedSeries.shift(self, n), base)

    def truncate(self, order: int):
        return self._wrap(TruncatedSeries.truncate(self, order), self.base_weight)

    def strings(self, digits: int = 20) -> list[str]:
        return [mpmath.nstr(c, digits) for c in self.coeffs]


def _zeros(M: int, base: int | None) -> TSeries:
    return TSeries([mpmath.mpf(0)] * M, base)


def _compositions_bounded(r: int, total_max: int):
    """Tuples of ``r`` nonnegative integers with sum at most ``total_max``."""
    for ns in product(range(total_max + 1), repeat=r):
        if sum(ns) <= total_max:
            yield ns


def _binomial_weight(ks: Sequence[int], ns: Sequence[int]) -> int:
    out = 1
    for k, n in zip(ks, ns):
        out *= comb(k + n - 1, n)
    return out


@lru_cache(maxsize=4096)
def _zeta_S_sh(k: Index, M: int, digits: int) -> tuple:
    r = len(k)
    dps = working_dps(digits)
    with mpmath.workdps(dps):
        coeffs = [mpmath.mpf(0)] * M
        for i in range(r + 1):
            head = mzv_sh(k[:i], digits)
            if not head:
                continue
            tail = k[i:]
            sign = (-1) ** sum(tail)
            for ns in _compositions_bounded(len(tail), M - 1):
                inner = tuple(kj + nj for kj, nj in zip(tail, ns))[::-1]
                c = _binomial_weight(tail, ns)
                coeffs[sum(ns)] += sign * c * head * mzv_sh(inner, digits)
        return tuple(coeffs)


def zeta_S_sh(k: Sequence[int], M: int, digits: int = 30) -> TSeries:
    """``zeta_S^sh(k)`` to t-order ``M`` from shuffle-regularized zeta values."""
    k = as_index(k)
    if not k:
        raise EmptyIndexError("index must be nonempty")
    return TSeries(_zeta_S_sh(k, M, digits), sum(k))


def zeta_S_star(k: Sequence[int], M: int, digits: int = 30) -> TSeries:
    """Sum of :func:`zeta_S_sh` over the star contractions of ``k``."""
    k = as_index(k)
    if not k:
        raise EmptyIndexError("index must be nonempty")
    out = _zeros(M, sum(k))
    with mpmath.workdps(working_dps(digits)):
        for v in star_expansion(VarIndex.ones(k)):
            out = out + zeta_S_sh(v.index, M, digits)
    return out


# -- symmetric polylogarithms -------------------------------------------------

def _ratio(a: Any, b: Any) -> Any:
    return exact(a) / exact(b)


def _is_zero(z: Any) -> bool:
    return exact(z) == 0


def _li(args: Sequence[Any], ks: Sequence[int], digits: int):
    v = VarIndex.of(list(args), list(ks))
    try:
        return li_sh(v, digits)
    except NotConvergentError as exc:
        raise UnsupportedDomainError(f"Li at {[str(a) for a in args]} needs analytic continuation") from exc


def _guard(args: Sequence[Any]) -> None:
    for z in args:
        if is_symbolic(z):
            raise UnsupportedDomainError("symbolic arguments have no numerical value")


def pounds_S_sh(alpha: int, v: VarIndex, M: int, digits: int = 30) -> TSeries:
    """The t-adic symmetric polylogarithm truncated at t-order ``M``.

    Terms with ``z_{i+1} = 0`` are skipped; every ratio argument must keep the
    polylogarithm in its convergent domain (trailing ``(1; 1)`` components are
    shuffle-regularized), otherwise :class:`UnsupportedDomainError` is raised.
    """
    if v.depth == 0:
        raise EmptyIndexError("index must be nonempty")
    zs = [exact(z) for z in v.args]
    _guard(zs)
    k = v.index
    r = len(k)
    ext = zs + [Fraction(1)]
    with mpmath.workdps(working_dps(digits)):
        coeffs = [mpmath.mpf(0)] * M
        terms = []
        for i in range(r + 1):
            zi = ext[i]
            if _is_zero(zi):
                continue
            head_args = [_ratio(z, zi) for z in zs[:i]]
            tail = k[i:]
            tail_args = [_ratio(z, zi) for z in ext[i + 1:]][::-1]
            terms.append((i, zi, head_args, tail, tail_args))
        # reject the whole call before evaluating anything when a ratio leaves the domain
        for _, _, head_args, _, tail_args in terms:
            for z in head_args + tail_args:
                if abs2(z) > 1:
                    raise UnsupportedDomainError(f"ratio argument {z} has modulus > 1")
        for i, zi, head_args, tail, tail_args in terms:
            head = _li(head_args, k[:i], digits)
            if not head:
                continue
            factor = (-1) ** sum(tail) * head * _power(zi, alpha)
            for ns in _compositions_bounded(len(tail), M - 1):
                inner = tuple(kj + nj for kj, nj in zip(tail, ns))[::-1]
                c = _binomial_weight(tail, ns)
                coeffs[sum(ns)] += factor * c * _li(tail_args, inner, digits)
        return TSeries(coeffs, sum(k))


def _power(z: Any, alpha: int):
    """Exact ``z^alpha`` (Gaussian rationals have no ``**``)."""
    out: Any = Fraction(1)
    for _ in range(abs(alpha)):
        out = out * exact(z)
    return to_mp(out if alpha >= 0 else 1 / out)


def pounds_S_star(alpha: int, v: VarIndex, M: int, digits: int = 30) -> TSeries:
    out = _zeros(M, v.weight)
    with mpmath.workdps(working_dps(digits)):
        for u in star_expansion(v):
            out = out + pounds_S_sh(alpha, u, M, digits)
    return out


def curly_L_S(alpha: int, v: VarIndex, M: int, digits: int = 30) -> TSeries:
    """``sum_{n<M} [ L*(z, {1}^n) - 1/2 L*(1, z_2, ..., {1}^n) ] t^n``."""
    if v.depth == 0:
        raise EmptyIndexError("index must be nonempty")
    out = _zeros(M, v.weight)
    half = mpmath.mpf(1) / 2
    with mpmath.workdps(working_dps(digits)):
        for n in range(M):
            ext = v.extend_ones(n)
            first = pounds_S_star(alpha, ext, M - n, digits)
            ones_first = VarIndex((Fraction(1),) + ext.args[1:], ext.index)
            second = pounds_S_star(alpha, ones_first, M - n, digits)
            bracket = first - second.scale(half)
            for m in range(M - n):
                out.coeffs[n + m] += bracket.coeffs[m]
    return out


# -- duality checks -----------------------------------------------------------

def star_series(k: Index, M: int, digits: int) -> TSeries:
    """``sum_{n<M} zeta*_S(k, {1}^n) t^n`` truncated at order ``M``."""
    out = _zeros(M, sum(k))
    with mpmath.workdps(working_dps(digits)):
        for n in range(M):
            s = zeta_S_star(tuple(k) + (1,) * n, M - n, digits)
            for m in range(M - n):
                out.coeffs[n + m] += s.coeffs[m]
    return out


def certify_series(diff: TSeries, digits: int, height_bound: int, label: str) -> tuple[str, list[dict]]:
    """Certify every coefficient of ``diff`` in ``zeta(2) * (MZV span)`` at its weight."""
    certs: list[RelationCertificate] = []
    for n, c in enumerate(diff.coeffs):
        certs.append(zeta2_membership(c, diff.weight(n), digits, height_bound, target=f"{label}[t^{n}]"))
    if all(c.found for c in certs):
        status = PASS
    elif any(not c.found and forced_zero(c.weight) for c in certs):
        status = FAIL
    else:
        status = INCONCLUSIVE
    return status, [c.to_dict() for c in certs]


def forced_zero(weight: int) -> bool:
    """Weights where ``zeta(2) * (MZV span)`` is zero, so a nonzero value is a genuine failure."""
    return weight < 2 or weight == 3


def check_smzv_duality(k: Sequence[int], M: int, digits: int = 60,
                       height_bound: int = 10 ** 6) -> VerificationReport:
    start = time.perf_counter()
    k = as_index(k)
    kv = vee(k)
    with mpmath.workdps(working_dps(digits)):
        D = star_series(k, M, digits) + star_series(kv, M, digits)
    status, certs = certify_series(D, digits, height_bound, "D")
    params = {"index": format_index(k), "dual": format_index(kv), "t_order": M, "digits": digits,
              "height": height_bound}
    return stamp(VerificationReport("smzv-duality", params, status, witness=certs,
                                    details={"D": D.strings(digits)}), start)


def main_theorem_sides(alpha: int, ks: Sequence[Sequence[int]], zs: Sequence[Any], M: int,
                       digits: int) -> tuple[TSeries, TSeries, VarIndex, VarIndex]:
    lhs_v, rhs_v = duality_pair(ks, [exact(z) for z in zs])
    lhs = curly_L_S(alpha, lhs_v, M, digits)
    rhs = curly_L_S(alpha, rhs_v, M, digits)
    return lhs, rhs, lhs_v, rhs_v


def check_main_theorem(alpha: int, ks: Sequence[Sequence[int]], zs: Sequence[Any], M: int,
                       digits: int = 60, height_bound: int = 10 ** 6) -> VerificationReport:
    """Both sides of the symmetric polylogarithm duality, certified coefficientwise mod ``zeta(2)``."""
    start = time.perf_counter()
    ks = [as_index(k) for k in ks]
    params = {"alpha": alpha, "indices": [format_index(k) for k in ks], "args": [str(exact(z)) for z in zs],
              "t_order": M, "digits": digits, "height": height_bound}
    try:
        with mpmath.workdps(working_dps(digits)):
            lhs, rhs, lhs_v, rhs_v = main_theorem_sides(alpha, ks, zs, M, digits)
            diff = lhs - rhs
    except UnsupportedDomainError as exc:
        return stamp(VerificationReport("main", params, UNSUPPORTED, witness=str(exc)), start)
    status, certs = certify_series(diff, digits, height_bound, "LHS-RHS")
    details = {"lhs_args": [str(z) for z in lhs_v.args], "lhs_index": format_index(lhs_v.index),
               "rhs_args": [str(z) for z in rhs_v.args], "rhs_index": format_index(rhs_v.index),
               "lhs": lhs.strings(digits), "rhs": rhs.strings(digits), "difference": diff.strings(digits)}
    return stamp(VerificationReport("main", params, status, witness=certs, details=details), start)
