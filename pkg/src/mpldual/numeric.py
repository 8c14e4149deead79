"""High-precision values of convergent multiple polylogarithms and iterated integrals.

Conventions: ``I(a_1 ... a_k)`` is the integral of ``prod dt_i/(t_i - a_i)``
over ``0 < t_1 < ... < t_k < 1`` along the straight path, so that
``Li(z; k) = (-1)^r I(e_{1/z_1} e_0^{k_1-1} ...)``.  All public evaluators take
a target number of decimal digits and work with 15 guard digits.
"""
from __future__ import annotations

import json
import math
import time
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any, Sequence

import mpmath

from .indices import (Index, NotAdmissibleError, VarIndex, admissible_indices, as_index, dagger,
                      depth, format_index, is_admissible, parse_index)
from .report import FAIL, PASS, VerificationReport, stamp
from .values import INFINITY, GaussianRational, exact, imag_part, is_symbolic, parse_value, real_part, to_mp
from .words import Word, index_to_word, mzv_word, regularized_part, word

GUARD_DIGITS = 15
MAX_TERMS = 200_000
MAX_STEPS = 10_000


class NotConvergentError(ValueError):
    """The requested value is outside the convergent domain."""


class PrecisionUnreachableError(ArithmeticError):
    """The series would need more than the configured number of terms."""


class StepUnderflowError(ArithmeticError):
    """The ODE stepper could not make progress towards the endpoint."""


def working_dps(digits: int) -> int:
    return int(digits) + GUARD_DIGITS


def _mp(a: Any):
    return to_mp(exact(a))


def _is_zero(a: Any) -> bool:
    return not is_symbolic(a) and a is not INFINITY and exact(a) == 0


def _abs(a: Any) -> float:
    a = exact(a)
    return math.hypot(float(real_part(a)), float(imag_part(a)))


def _check_letters(w: Word) -> None:
    for a in w:
        if is_symbolic(a):
            raise TypeError(f"letter {a} is symbolic")
        if a is INFINITY:
            continue
        if imag_part(a) == 0 and 0 < real_part(a) < 1:
            raise NotConvergentError(f"letter {a} lies on the open path (0, 1)")
    if w and (_is_zero(w[0]) or w[-1] == 1):
        raise NotConvergentError("word must not start with e_0 or end with e_1")


# -- series kernel ----------------------------------------------------------

def _fixed(x: Fraction, prec: int) -> int:
    return (x.numerator << prec) // x.denominator


def _series(args: tuple, ks: tuple, dps: int) -> tuple[Any, Any]:
    """``Li(args; ks)`` and a bound on the truncation error, at ``dps`` digits.

    Requires ``max|args| < 1``.  Runs in binary fixed point with guard bits.
    The n-th layer is bounded by ``C(n-1, r-1) rho^n``; summation stops once
    the geometric tail of that bound is below ``10^-dps``.
    """
    r = len(ks)
    if r == 0:
        return mpmath.mpf(1), mpmath.mpf(0)
    if any(_is_zero(z) for z in args):
        return mpmath.mpf(0), mpmath.mpf(0)
    rho = max(_abs(z) for z in args)
    if rho >= 1:
        raise NotConvergentError(f"series needs max|z| < 1, got {rho}")
    prec = int(dps * 3.3219280948873626) + 32
    zr = [_fixed(real_part(exact(z)), prec) for z in args]
    zi = [_fixed(imag_part(exact(z)), prec) for z in args]
    cplx = any(zi)
    Hr = [0] * (r + 1)
    Hi = [0] * (r + 1)
    pr = [1 << prec] + [0] * r
    pi = [0] * (r + 1)
    tr = ti = 0
    log_rho = math.log(rho)
    target = -dps * math.log(10)
    n = 0
    while True:
        n += 1
        if n > MAX_TERMS:
            raise PrecisionUnreachableError(f"more than {MAX_TERMS} terms needed (rate {rho})")
        cr = [0] * (r + 1)
        ci = [0] * (r + 1)
        for j in range(1, r + 1):
            ar = Hr[j] + pr[j - 1]
            if cplx:
                ai = Hi[j] + pi[j - 1]
                Hr[j] = (zr[j - 1] * ar - zi[j - 1] * ai) >> prec
                Hi[j] = (zr[j - 1] * ai + zi[j - 1] * ar) >> prec
                d = n ** ks[j - 1]
                cr[j] = Hr[j] // d
                ci[j] = Hi[j] // d
            else:
                Hr[j] = (zr[j - 1] * ar) >> prec
                cr[j] = Hr[j] // n ** ks[j - 1]
        tr += cr[r]
        ti += ci[r]
        pr, pi = cr, ci
        if n >= r:
            m = n + 1
            q = rho * m / (m - r + 1)
            if q < 1:
                log_bound = (math.lgamma(m) - math.lgamma(r) - math.lgamma(m - r + 1) + m * log_rho
                             - math.log(1 - q))
                if log_bound < target:
                    # each of the ~4 r n rounding steps loses at most one unit in the last place
                    rounding = mpmath.ldexp(mpmath.mpf(4 * r * n + 4), -prec)
                    value = mpmath.ldexp(mpmath.mpf(tr), -prec)
                    if cplx:
                        value = mpmath.mpc(value, mpmath.ldexp(mpmath.mpf(ti), -prec))
                    return value, mpmath.exp(log_bound) + rounding


def _blocks(w: Word) -> tuple[tuple, tuple]:
    """Split ``e_{c_1} e_0^{m_1-1} ...`` into Li arguments ``1/c_j`` and depths ``m_j``."""
    args: list[Any] = []
    ks: list[int] = []
    for a in w:
        if _is_zero(a):
            ks[-1] += 1
        else:
            args.append(Fraction(0) if a is INFINITY else 1 / exact(a))
            ks.append(1)
    return tuple(args), tuple(ks)


@lru_cache(maxsize=1 << 16)
def _dch(w: Word, dps: int) -> tuple[Any, Any]:
    """``I(w)`` on [0, 1] for a word whose nonzero letters all have modulus > 1."""
    if not w:
        return mpmath.mpf(1), mpmath.mpf(0)
    if _is_zero(w[0]):
        raise NotConvergentError("word starts with e_0")
    args, ks = _blocks(w)
    with mpmath.workdps(dps):
        value, err = _series(args, ks, dps)
        return (value if len(args) % 2 == 0 else -value), err


def _left(w: Word, lam: Fraction, dps: int):
    """``I`` over [0, lam]: rescale letters ``a -> a/lam``."""
    return _dch(tuple(a if a is INFINITY else exact(a) / lam for a in w), dps)


def _right(w: Word, lam: Fraction, dps: int):
    """``I`` over [lam, 1]: reverse the path and send ``a -> (1-a)/(1-lam)``."""
    mapped = tuple(a if a is INFINITY else (1 - exact(a)) / (1 - lam) for a in reversed(w))
    value, err = _dch(mapped, dps)
    return (value if len(w) % 2 == 0 else -value), err


def split_rate(w: Word, lam: Fraction) -> float:
    """Geometric convergence rate of both halves when splitting at ``lam``."""
    rate = 0.0
    for a in w:
        if a is INFINITY:
            continue
        if not _is_zero(a):
            rate = max(rate, float(lam) / _abs(a))
        if exact(a) != 1:
            rate = max(rate, float(1 - lam) / _abs(1 - exact(a)))
    return rate


def best_split(w: Word, grid: int = 64) -> Fraction:
    """The grid point ``lam`` in (0, 1) minimizing :func:`split_rate`, preferring 1/2 on ties."""
    best, best_rate = Fraction(1, 2), split_rate(w, Fraction(1, 2))
    for i in range(1, grid):
        lam = Fraction(i, grid)
        rate = split_rate(w, lam)
        if rate < best_rate - 1e-12:
            best, best_rate = lam, rate
    return best


def alternate_split(w: Word, grid: int = 64) -> Fraction:
    """Best split at least 1/16 away from :func:`best_split`.

    Evaluating the two sides of a duality at different splits keeps the
    comparison from reducing to a term-by-term mirror image.
    """
    first = best_split(w, grid)
    cands = [Fraction(i, grid) for i in range(1, grid) if abs(Fraction(i, grid) - first) >= Fraction(1, 16)]
    return min(cands, key=lambda lam: (split_rate(w, lam), abs(lam - first)))


SEGMENT_RATE = 0.5
TWO_SPLIT_LIMIT = 0.6


def _segment(w: Word, c0: Fraction, c1: Fraction, dps: int):
    """``I`` over [c0, c1] expanded at ``c0``: letters ``a -> (a - c0)/(c1 - c0)``."""
    h = c1 - c0
    return _dch(tuple(a if a is INFINITY else (exact(a) - c0) / h for a in w), dps)


def segment_points(w: Word, rate: float = SEGMENT_RATE) -> list[Fraction]:
    """Points ``0 < c_1 < ... < 1`` so every segment series converges at ``rate``.

    Inner segments are expanded at their left end, the last one at 1.
    """
    finite = [exact(a) for a in w if a is not INFINITY]
    far_from_one = min((_abs(1 - a) for a in finite if a != 1), default=math.inf)
    points = [Fraction(0)]
    c = Fraction(0)
    while (1 - c) > rate * far_from_one:
        dist = min((_abs(a - c) for a in finite if a != c), default=math.inf)
        step = min(rate * dist, float(1 - c))
        # 24 significant bits keep the points short rationals at any scale
        mant, e = math.frexp(step)
        q = Fraction(math.floor(mant * 2 ** 24), 2 ** (24 - e)) if e < 24 else Fraction(math.floor(step))
        if q <= 0:
            raise PrecisionUnreachableError("letters too close to the path")
        c = c + q
        if len(points) > MAX_STEPS:
            raise PrecisionUnreachableError("too many path segments")
        if c >= 1:
            break
        points.append(c)
    return points + [Fraction(1)]


def _expansion_rate(w: Word, centre: Fraction, length: Fraction) -> float:
    dists = [_abs(exact(a) - centre) for a in w if a is not INFINITY and exact(a) != centre]
    return float(length) / min(dists) if dists else 0.0


def _compose(w: Word, points: Sequence[Fraction], dps: int) -> tuple[Any, Any]:
    """Path composition over consecutive segments: sum over all factorizations of ``w``."""
    k = len(w)
    c0, c1 = points[-2], points[-1]
    last_forward = _expansion_rate(w, c0, c1 - c0) < _expansion_rate(w, c1, c1 - c0)
    vals = [mpmath.mpf(1)] + [mpmath.mpf(0)] * k
    errs = [mpmath.mpf(0)] * (k + 1)
    m = len(points) - 1
    for j in range(m):
        c0, c1 = points[j], points[j + 1]
        new_vals = [mpmath.mpf(0)] * (k + 1)
        new_errs = [mpmath.mpf(0)] * (k + 1)
        for i in range(k + 1):
            if j == m - 1 and i < k:
                continue  # the last segment must absorb the whole remaining word
            for s in range(i + 1):
                if not vals[s] and not errs[s]:
                    continue
                if j == 0 and s > 0:
                    continue
                piece = w[s:i]
                if j == m - 1 and not last_forward:
                    b, eb = _right(piece, c0, dps)
                else:
                    b, eb = _segment(piece, c0, c1, dps)
                new_vals[i] += vals[s] * b
                new_errs[i] += abs(vals[s]) * eb + abs(b) * errs[s] + errs[s] * eb
        vals, errs = new_vals, new_errs
    return vals[k], errs[k]


def _holder(w: Word, dps: int, lam: Fraction | None = None) -> tuple[Any, Any]:
    if not w:
        return mpmath.mpf(1), mpmath.mpf(0)
    if any(a is INFINITY for a in w):
        return mpmath.mpf(0), mpmath.mpf(0)
    _check_letters(w)
    if lam is None:
        lam = best_split(w)
        points = [Fraction(0), lam, Fraction(1)]
        if split_rate(w, lam) > TWO_SPLIT_LIMIT:
            points = segment_points(w)
    else:
        lam = Fraction(lam)
        if split_rate(w, lam) >= 1:
            raise NotConvergentError(f"split at {lam} does not converge for {w}")
        points = [Fraction(0), lam, Fraction(1)]
    with mpmath.workdps(dps):
        return _compose(w, points, dps)


def holder(w: Sequence[Any], digits: int = 30, *, split: Any = None, with_error: bool = False):
    """``I(w)`` by path composition at an automatically chosen split point.

    Both halves become multiple polylogarithm series of geometric rate; the
    split minimizes the worse of the two rates.  Words whose best split is
    slower than ``TWO_SPLIT_LIMIT`` are cut into more segments.
    """
    w = word(w)
    dps = working_dps(digits)
    value, err = _holder(w, dps, split)
    return (value, err) if with_error else value


# -- Chen ODE ----------------------------------------------------------------

def _ode_to(w: Word, end, dps: int) -> list:
    """Values ``F_j(end) = I_{[0,end]}(a_1 ... a_j)`` by Taylor stepping."""
    k = len(w)
    letters = [_mp(a) for a in w]
    F = [mpmath.mpf(1)] + [mpmath.mpf(0)] * k
    c = mpmath.mpf(0)
    tiny = mpmath.mpf(10) ** (-dps)
    nterms = int(3.5 * dps) + 20
    steps = 0
    while end - c > tiny:
        steps += 1
        if steps > MAX_STEPS:
            raise StepUnderflowError(f"stepper stalled at t = {mpmath.nstr(c, 10)}")
        dists = [abs(a - c) for a in letters if abs(a - c) > tiny]
        R = min(dists) if dists else mpmath.mpf(1)
        h = min(R / 2, end - c)
        prev_coeffs = [F[0]] + [mpmath.mpf(0)] * nterms
        newF = [F[0]]
        for j in range(1, k + 1):
            delta = c - letters[j - 1]
            f = [F[j]] + [mpmath.mpf(0)] * nterms
            if abs(delta) <= tiny:
                for m in range(1, nterms + 1):
                    f[m] = prev_coeffs[m] / m
            else:
                for m in range(nterms):
                    f[m + 1] = (prev_coeffs[m] - m * f[m]) / ((m + 1) * delta)
            newF.append(mpmath.polyval(f[::-1], h))
            prev_coeffs = f
        F = newF
        c = c + h
    return F


def chen_ode(w: Sequence[Any], digits: int = 30):
    """``I(w)`` by integrating ``dF_j = F_{j-1} dt/(t - a_j)`` along [0, 1].

    When some letter sits at 1 the stepper stops at ``1 - delta`` and the
    remaining segment is joined by path composition with a short endpoint series.
    """
    w = word(w)
    if not w:
        return mpmath.mpf(1)
    if any(a is INFINITY for a in w):
        return mpmath.mpf(0)
    _check_letters(w)
    dps = working_dps(digits)
    with mpmath.workdps(dps):
        if all(exact(a) != 1 for a in w):
            return _ode_to(w, mpmath.mpf(1), dps)[-1]
        far = [_abs(1 - exact(a)) for a in w if exact(a) != 1]
        delta = Fraction(1, 4)
        while far and float(delta) > min(far) / 4:
            delta /= 2
        lam = 1 - delta
        F = _ode_to(w, _mp(lam), dps)
        total = mpmath.mpf(0)
        for i in range(len(w) + 1):
            total += F[i] * _right(w[i:], lam, dps)[0]
        return total


# -- polylogarithms and zeta values ------------------------------------------

def series_convergent(v: VarIndex) -> bool:
    if any(is_symbolic(z) for z in v.args):
        return False
    if any(_abs(z) > 1 for z in v.args):
        return False
    return not (v.index and v.index[-1] == 1 and exact(v.args[-1]) == 1)


def li_series(v: VarIndex, digits: int = 30, *, direct_radius: float = 0.75, split: Any = None,
              with_error: bool = False):
    """``Li(z; k)`` for a series-convergent VarIndex.

    Points with ``max|z| <= direct_radius`` are summed directly; the rest
    (including the boundary ``|z| = 1``) go through :func:`holder`; ``split``
    fixes its split point, ``"alternate"`` picks :func:`alternate_split`.
    """
    if not series_convergent(v):
        raise NotConvergentError(f"{v} is not series-convergent")
    dps = working_dps(digits)
    with mpmath.workdps(dps):
        if v.depth == 0:
            out = (mpmath.mpf(1), mpmath.mpf(0))
        elif any(_is_zero(z) for z in v.args):
            out = (mpmath.mpf(0), mpmath.mpf(0))
        elif max(_abs(z) for z in v.args) <= direct_radius:
            out = _series(tuple(exact(z) for z in v.args), v.index, dps)
        else:
            w = index_to_word(v)
            value, err = _holder(w, dps, alternate_split(w) if split == "alternate" else split)
            out = (value if v.depth % 2 == 0 else -value, err)
    return out if with_error else out[0]


def li_sh(v: VarIndex, digits: int = 30):
    """``Li`` with shuffle regularization of trailing ``(1; 1)`` components.

    Any zero argument gives 0; otherwise all ``|z_i| <= 1`` is required.
    """
    if v.depth == 0:
        return mpmath.mpf(1)
    if any(_is_zero(z) for z in v.args):
        return mpmath.mpf(0)
    if series_convergent(v):
        return li_series(v, digits)
    if any(is_symbolic(z) or _abs(z) > 1 for z in v.args):
        raise NotConvergentError(f"{v} is outside the supported domain")
    dps = working_dps(digits)
    with mpmath.workdps(dps):
        total = mpmath.mpf(0)
        for u, c in regularized_part(index_to_word(v)):
            total += mpmath.mpf(c.numerator) / c.denominator * _holder(u, dps)[0]
        return total if v.depth % 2 == 0 else -total


@lru_cache(maxsize=1 << 14)
def _mzv(k: Index, dps: int):
    with mpmath.workdps(dps):
        value, _ = _holder(mzv_word(k), dps)
        return value if len(k) % 2 == 0 else -value


def mzv(k: Sequence[int], digits: int = 30):
    """``zeta(k)`` for an admissible index (``zeta(()) = 1``)."""
    k = as_index(k)
    if not is_admissible(k):
        raise NotAdmissibleError(f"{format_index(k)} is not admissible; use mzv_sh")
    return _mzv(k, working_dps(digits))


@lru_cache(maxsize=1 << 14)
def _mzv_sh(k: Index, dps: int):
    if is_admissible(k):
        return _mzv(k, dps)
    with mpmath.workdps(dps):
        total = mpmath.mpf(0)
        for u, c in regularized_part(mzv_word(k)):
            total += mpmath.mpf(c.numerator) / c.denominator * _holder(u, dps)[0]
        return total if len(k) % 2 == 0 else -total


def mzv_sh(k: Sequence[int], digits: int = 30):
    """Shuffle-regularized ``zeta^sh(k)``: the constant term after stripping trailing ``e_1``."""
    return _mzv_sh(as_index(k), working_dps(digits))


def clear_caches() -> None:
    for f in (_dch, _mzv, _mzv_sh):
        f.cache_clear()


# -- complex duality ---------------------------------------------------------

@dataclass(frozen=True)
class MplDualityInstance:
    """Data of one complex MPL duality: indices ``l``, integers ``a``, ``b`` and points ``w``."""

    l: tuple[Index, ...]
    a: tuple[int, ...]
    b: tuple[int, ...]
    w: tuple[Any, ...]
    strict: bool = True  # False tolerates conditions 2 and 3 when both sides still converge

    @classmethod
    def of(cls, l: Sequence[Sequence[int]], a: Sequence[int] = (), b: Sequence[int] = (),
           w: Sequence[Any] = (), strict: bool = True) -> "MplDualityInstance":
        return cls(tuple(as_index(x) for x in l), tuple(int(x) for x in a), tuple(int(x) for x in b),
                   tuple(exact(x) for x in w), bool(strict))

    @classmethod
    def from_dict(cls, data: dict) -> "MplDualityInstance":
        l = [parse_index(x) if isinstance(x, str) else x for x in data["l"]]
        w = [parse_value(x) if isinstance(x, str) else x for x in data.get("w", [])]
        return cls.of(l, data.get("a", []), data.get("b", []), w, data.get("strict", True))

    @property
    def d(self) -> int:
        return len(self.l)

    def to_dict(self) -> dict:
        return {"l": [format_index(x) for x in self.l], "a": list(self.a), "b": list(self.b),
                "w": [str(x) for x in self.w], "strict": self.strict}

    def violations(self) -> list[str]:
        """Failed hypotheses, empty when the instance is valid."""
        out = []
        d = self.d
        if d < 1:
            out.append("d >= 1")
        if not (len(self.a) == len(self.b) == len(self.w) == d - 1):
            out.append("a, b and w need d - 1 entries")
            return out
        for i, x in enumerate(self.l):
            if not is_admissible(x):
                out.append(f"l_{i + 1} = {format_index(x)} is not admissible")
        if any(x < 1 for x in self.a + self.b):
            out.append("a_i, b_i >= 1")
        for i, w in enumerate(self.w):
            if real_part(w) > Fraction(1, 2) or real_part(w) ** 2 + imag_part(w) ** 2 > 1:
                out.append(f"condition 1 fails for w_{i + 1} = {w}: need Re w <= 1/2 and |w| <= 1")
        if d >= 2 and not self.l[0] and self.a[0] == 1 and real_part(self.w[0]) == Fraction(1, 2):
            out.append("condition 2 fails: Re w_1 = 1/2 with l_1 empty and a_1 = 1")
        if d >= 2 and not self.l[-1] and self.b[-1] == 1:
            w = self.w[-1]
            if real_part(w) ** 2 + imag_part(w) ** 2 == 1:
                out.append("condition 3 fails: |w_{d-1}| = 1 with l_d empty and b_{d-1} = 1")
        return out


class HypothesisError(ValueError):
    pass


def build_duality_pair(inst: MplDualityInstance) -> tuple[VarIndex, VarIndex, int]:
    """Both sides of the complex duality and the sign ``(-1)^(d-1)``."""
    bad = inst.violations()
    if not inst.strict:
        bad = [x for x in bad if not x.startswith(("condition 2", "condition 3"))]
    if bad:
        raise HypothesisError("; ".join(bad))
    d = inst.d
    r = [depth(x) for x in inst.l]
    duals = [dagger(x) for x in inst.l]
    s = [depth(x) for x in duals]
    args: list[Any] = []
    ks: list[int] = []
    for i in range(d - 1):
        args += [Fraction(1)] * (r[i] + inst.a[i] - 1) + [inst.w[i]]
        ks += list(inst.l[i]) + [1] * (inst.a[i] - 1) + [inst.b[i]]
    args += [Fraction(1)] * r[d - 1]
    ks += list(inst.l[d - 1])
    dargs: list[Any] = []
    dks: list[int] = []
    for i in range(d - 2, -1, -1):
        w = inst.w[i]
        dargs += [Fraction(1)] * (s[i + 1] + inst.b[i] - 1) + [w / (w - 1)]
        dks += list(duals[i + 1]) + [1] * (inst.b[i] - 1) + [inst.a[i]]
    dargs += [Fraction(1)] * s[0]
    dks += list(duals[0])
    return VarIndex.of(args, ks), VarIndex.of(dargs, dks), (-1) ** (d - 1)


def _str(x: Any, digits: int) -> str:
    return mpmath.nstr(x, digits)


def check_mpl_duality(inst: MplDualityInstance, digits: int = 30) -> VerificationReport:
    start = time.perf_counter()
    lhs_v, rhs_v, sign = build_duality_pair(inst)
    if not (series_convergent(lhs_v) and series_convergent(rhs_v)):
        raise NotConvergentError("both sides must be series-convergent")
    lhs = li_series(lhs_v, digits)
    rhs = li_series(rhs_v, digits, split="alternate")
    with mpmath.workdps(working_dps(digits)):
        residual = abs(lhs - sign * rhs)
    tol = mpmath.mpf(10) ** (-digits + 10)
    params = dict(inst.to_dict(), digits=digits)
    details = {"lhs": {"args": [str(z) for z in lhs_v.args], "index": format_index(lhs_v.index),
                       "value": _str(lhs, digits)},
               "rhs": {"args": [str(z) for z in rhs_v.args], "index": format_index(rhs_v.index),
                       "value": _str(rhs, digits)},
               "sign": sign, "relaxed_hypotheses": inst.violations()}
    status = PASS if residual < tol else FAIL
    return stamp(VerificationReport("mpl-duality", params, status, residual=_str(residual, 5),
                                    witness=None if status == PASS else details["lhs"]["value"],
                                    details=details), start)


def check_mzv_duality(k: Sequence[int], digits: int = 30) -> VerificationReport:
    start = time.perf_counter()
    k = as_index(k)
    kd = dagger(k)
    a = mzv(k, digits)
    wd = mzv_word(kd)
    with mpmath.workdps(working_dps(digits)):
        b = _holder(wd, working_dps(digits), alternate_split(wd))[0] * (-1) ** len(kd)
    with mpmath.workdps(working_dps(digits)):
        residual = abs(a - b)
    status = PASS if residual < mpmath.mpf(10) ** (-digits + 10) else FAIL
    params = {"index": format_index(k), "dual": format_index(kd), "digits": digits}
    return stamp(VerificationReport("mzv-duality", params, status, residual=_str(residual, 5),
                                    witness=None if status == PASS else {"lhs": _str(a, digits),
                                                                         "rhs": _str(b, digits)},
                                    details={"value": _str(a, digits)}), start)


def mzv_duality_indices(max_weight: int) -> list[Index]:
    return [k for w in range(2, max_weight + 1) for k in admissible_indices(w)]


def load_instances(path: str) -> list[MplDualityInstance]:
    """Read instances from a JSON file holding one object or a list of objects."""
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    if isinstance(data, dict):
        data = data.get("instances", [data])
    return [MplDualityInstance.from_dict(x) for x in data]


def default_instances() -> list[MplDualityInstance]:
    """Closed-form case plus nontrivial instances with complex points and nonempty ``l_i``."""
    half_i = GaussianRational(Fraction(-1, 2), Fraction(1, 2))
    return [
        MplDualityInstance.of([(), ()], [1], [1], [-1], strict=False),
        MplDualityInstance.of([(1, 2)]),
        MplDualityInstance.of([(2,), ()], [1], [2], [half_i]),
        MplDualityInstance.of([(), ()], [1], [2], [-1]),
        MplDualityInstance.of([(1, 2), (2,)], [2], [1], [Fraction(1, 3)]),
        MplDualityInstance.of([(2,), (3,)], [1], [1], [GaussianRational(Fraction(1, 4), Fraction(-2, 3))]),
        MplDualityInstance.of([(), (2,), ()], [1, 2], [2, 1], [half_i, Fraction(-1, 2)]),
        MplDualityInstance.of([(1, 2), ()], [1], [2], [GaussianRational(Fraction(0), Fraction(1))]),
    ]


# -- cross-method checks -----------------------------------------------------

def _word_str(w: Word) -> list[str]:
    return [str(a) for a in w]


def _max_gap(values: dict[str, Any]) -> Any:
    names = sorted(values)
    return max(abs(values[a] - values[b]) for i, a in enumerate(names) for b in names[i + 1:])


def check_methods(w: Sequence[Any], digits: int = 40, tol_digits: int = 5) -> VerificationReport:
    """``holder`` against ``chen_ode`` on one convergent word."""
    start = time.perf_counter()
    w = word(w)
    values = {"holder": holder(w, digits), "chen_ode": chen_ode(w, digits)}
    with mpmath.workdps(working_dps(digits)):
        gap = _max_gap(values)
    status = PASS if gap < mpmath.mpf(10) ** (-digits + tol_digits) else FAIL
    params = {"word": _word_str(w), "digits": digits}
    shown = {k: _str(v, digits) for k, v in values.items()}
    return stamp(VerificationReport("crosscheck-methods", params, status, residual=_str(gap, 5),
                                    witness=None if status == PASS else shown, details=shown), start)


def check_interior(v: VarIndex, digits: int = 40, tol_digits: int = 5) -> VerificationReport:
    """Direct series, ``holder`` and ``chen_ode`` on an interior point ``max|z| < 1``."""
    start = time.perf_counter()
    w = index_to_word(v)
    sign = (-1) ** v.depth
    with mpmath.workdps(working_dps(digits)):
        values = {"series": li_series(v, digits, direct_radius=1.0),
                  "holder": sign * holder(w, digits),
                  "chen_ode": sign * chen_ode(w, digits)}
        gap = _max_gap(values)
    status = PASS if gap < mpmath.mpf(10) ** (-digits + tol_digits) else FAIL
    params = {"index": format_index(v.index), "args": [str(z) for z in v.args], "digits": digits}
    shown = {k: _str(x, digits) for k, x in values.items()}
    return stamp(VerificationReport("crosscheck-interior", params, status, residual=_str(gap, 5),
                                    witness=None if status == PASS else shown, details=shown), start)


def check_shuffle_product(w1: Sequence[Any], w2: Sequence[Any], digits: int = 40,
                          tol_digits: int = 8) -> VerificationReport:
    """``I(w1) I(w2) = I(w1 sh w2)`` numerically."""
    from .words import shuffle

    start = time.perf_counter()
    w1, w2 = word(w1), word(w2)
    dps = working_dps(digits)
    with mpmath.workdps(dps):
        lhs = holder(w1, digits) * holder(w2, digits)
        rhs = mpmath.mpf(0)
        for u, c in shuffle(w1, w2):
            rhs += c * holder(u, digits)
        gap = abs(lhs - rhs)
    status = PASS if gap < mpmath.mpf(10) ** (-digits + tol_digits) else FAIL
    params = {"w1": _word_str(w1), "w2": _word_str(w2), "digits": digits}
    return stamp(VerificationReport("crosscheck-shuffle", params, status, residual=_str(gap, 5),
                                    witness=None if status == PASS else {"lhs": _str(lhs, digits),
                                                                         "rhs": _str(rhs, digits)}), start)


def random_convergent_words(count: int, seed: int = 0, max_len: int = 4) -> list[tuple[Word, Word]]:
    """Reproducible pairs of convergent words over a small alphabet of exact points."""
    import random

    rng = random.Random(seed)
    alphabet = [Fraction(0), Fraction(1), Fraction(-1), Fraction(2), Fraction(3, 2),
                GaussianRational(Fraction(1, 2), Fraction(1)), GaussianRational(Fraction(0), Fraction(-1))]

    def one() -> Word:
        while True:
            w = tuple(rng.choice(alphabet) for _ in range(rng.randint(1, max_len)))
            if is_convergent_word_strict(w):
                return w

    return [(one(), one()) for _ in range(count)]


def is_convergent_word_strict(w: Word) -> bool:
    return bool(w) and not _is_zero(w[0]) and exact(w[-1]) != 1


def interior_points() -> list[VarIndex]:
    """Sample points with ``max|z| <= 1/2`` and weight at most 4."""
    h = Fraction(1, 2)
    c = GaussianRational(Fraction(1, 4), Fraction(-1, 3))
    return [
        VarIndex.of([h], [1]), VarIndex.of([-h], [2]), VarIndex.of([Fraction(1, 3)], [4]),
        VarIndex.of([h, -h], [1, 1]), VarIndex.of([c, h], [2, 1]), VarIndex.of([Fraction(-1, 3), c], [1, 3]),
        VarIndex.of([h, h, h], [1, 1, 2]), VarIndex.of([c, Fraction(1, 5), -h], [2, 1, 1]),
        VarIndex.of([Fraction(2, 5), Fraction(-1, 4), c, h], [1, 1, 1, 1]),
    ]
