"""Nested truncated sums ``sum prod z_i^(n_i - n_{i-1}) / n_i^k_i`` over any ring.

The sums are evaluated layer by layer instead of by an r-fold loop.  With
``G_j(n)`` the partial sum over chains ending in ``n_j = n``::

    H_j(n) = z_j * (H_j(n-1) + G_{j-1}(n-1))     strict step (n_{j-1} < n_j)
    H_j(n) = G_{j-1}(n) + z_j * H_j(n-1)         weak step   (n_{j-1} <= n_j)
    G_j(n) = H_j(n) / n^k_j

The first step is always strict because ``n_0 = 0 < n_1``.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations, combinations_with_replacement
from typing import Any, Callable, Sequence

from .polynomials import RationalPolynomial


def nested_layers(
    ks: Sequence[int],
    args: Sequence[Any],
    N: int,
    *,
    star: bool = False,
    one: Any = Fraction(1),
    inv_power: Callable[[int, int], Any] | None = None,
) -> list[Any]:
    """Return ``[G_r(n) for n in range(N)]``.

    ``one`` fixes the ring (its ``one - one`` is used as zero); ``inv_power(n, k)``
    must return ``1/n^k`` in that ring and defaults to an exact Fraction.
    """
    if inv_power is None:
        inv_power = _fraction_inv_power
    r = len(ks)
    zero = one - one
    if r == 0:
        return [one] + [zero] * (N - 1) if N > 0 else []
    trivial = [_is_one(x) for x in args]
    H = [zero] * (r + 1)
    prev = [one] + [zero] * r
    out = [zero] if N > 0 else []
    for n in range(1, N):
        cur = [zero] * (r + 1)
        for j in range(1, r + 1):
            x = args[j - 1]
            if j == 1 or not star:
                h = H[j] + prev[j - 1]
                H[j] = h if trivial[j - 1] else x * h
            else:
                H[j] = cur[j - 1] + (H[j] if trivial[j - 1] else x * H[j])
            cur[j] = H[j] * inv_power(n, ks[j - 1])
        prev = cur
        out.append(cur[r])
    return out


def nested_sum(ks: Sequence[int], args: Sequence[Any], N: int, **kw: Any) -> Any:
    layers = nested_layers(ks, args, N, **kw)
    one = kw.get("one", Fraction(1))
    total = one - one
    for g in layers:
        total = total + g
    return total


def brute_force_sum(ks: Sequence[int], args: Sequence[Any], N: int, *, star: bool = False,
                    one: Any = Fraction(1)) -> Any:
    """Same value as :func:`nested_sum`, by enumerating every lattice point.

    Kept deliberately naive: it is the independent route that the layered
    evaluation is checked against.
    """
    r = len(ks)
    if r == 0:
        return one if N >= 1 else one - one
    chains = combinations_with_replacement(range(1, N), r) if star else combinations(range(1, N), r)
    if isinstance(one, RationalPolynomial) and all(
            isinstance(z, RationalPolynomial) and len(z.terms) == 1 and z.variables == one.variables
            for z in args):
        return _brute_force_monomial(ks, args, chains, one)
    total = one - one
    for ns in chains:
        term = one
        prevn = 0
        for z, k, n in zip(args, ks, ns):
            term = term * (z ** (n - prevn)) * Fraction(1, n ** k)
            prevn = n
        total = _accumulate(total, term)
    return total


def _brute_force_monomial(ks: Sequence[int], args: Sequence[RationalPolynomial], chains: Any,
                          one: RationalPolynomial) -> RationalPolynomial:
    # each argument is c * z^e, so every lattice point contributes a single monomial
    pairs = [next(iter(z.terms.items())) for z in args]
    nv = len(one.variables)
    acc: dict[tuple[int, ...], Fraction] = {}
    for ns in chains:
        mono = [0] * nv
        num, den = 1, 1
        prevn = 0
        for (e, c), k, n in zip(pairs, ks, ns):
            gap = n - prevn
            for i in range(nv):
                mono[i] += e[i] * gap
            num *= c.numerator ** gap
            den *= c.denominator ** gap * n ** k
            prevn = n
        key = tuple(mono)
        acc[key] = acc.get(key, 0) + Fraction(num, den)
    out = RationalPolynomial(one.variables)
    out.terms = {m: c for m, c in acc.items() if c}
    return out


def _accumulate(total: Any, term: Any) -> Any:
    # in place for polynomials: rebuilding the running sum per point is quadratic
    if isinstance(total, RationalPolynomial) and isinstance(term, RationalPolynomial) \
            and total.variables == term.variables:
        acc = total.terms
        for m, c in term.terms.items():
            s = acc.get(m, 0) + c
            if s:
                acc[m] = s
            else:
                acc.pop(m, None)
        return total
    return total + term


def _fraction_inv_power(n: int, k: int) -> Fraction:
    return Fraction(1, n ** k)


def _is_one(x: Any) -> bool:
    try:
        return bool(x == 1)
    except TypeError:
        return False
