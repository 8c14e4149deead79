"""Truncated polylogarithms modulo prime powers and the finite dualities.

The completed ring of "values for almost all primes" is never built.  Every
statement is checked prime by prime in ``Z/p^M``; the ``p``-adic series in
the duality is finite there because terms ``p^n`` with ``n >= M`` vanish.
``p = 2`` is excluded throughout (the combination needs ``1/2``).
"""
from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterable, Sequence

import numpy as np

from . import kernels
from .indices import Index, VarIndex, as_index, format_index, vee
from .polynomials import RationalPolynomial
from .report import FAIL, PASS, VerificationReport, stamp
from .values import exact, is_symbolic


class ModularError(ArithmeticError):
    """Raised for a non-invertible residue or an unsupported modulus."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def primes_between(lo: int, hi: int) -> list[int]:
    return [p for p in range(lo, hi + 1) if is_prime(p)]


@dataclass(frozen=True)
class ModPrimePower:
    """A residue modulo ``p^M``."""

    p: int
    M: int
    residue: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "residue", self.residue % self.modulus)

    @property
    def modulus(self) -> int:
        return self.p ** self.M

    @classmethod
    def of(cls, x: Any, p: int, M: int) -> "ModPrimePower":
        x = Fraction(x)
        if x.denominator % p == 0:
            raise ModularError(f"{x} has a denominator divisible by {p}")
        return cls(p, M, x.numerator * pow(x.denominator, -1, p ** M))

    def _coerce(self, other: Any) -> int:
        if isinstance(other, ModPrimePower):
            if (other.p, other.M) != (self.p, self.M):
                raise ModularError("residues modulo different prime powers")
            return other.residue
        return ModPrimePower.of(other, self.p, self.M).residue

    def __add__(self, other: Any) -> "ModPrimePower":
        return ModPrimePower(self.p, self.M, self.residue + self._coerce(other))

    __radd__ = __add__

    def __sub__(self, other: Any) -> "ModPrimePower":
        return ModPrimePower(self.p, self.M, self.residue - self._coerce(other))

    def __neg__(self) -> "ModPrimePower":
        return ModPrimePower(self.p, self.M, -self.residue)

    def __mul__(self, other: Any) -> "ModPrimePower":
        return ModPrimePower(self.p, self.M, self.residue * self._coerce(other))

    __rmul__ = __mul__

    def inverse(self) -> "ModPrimePower":
        if self.residue % self.p == 0:
            raise ModularError(f"{self.residue} is divisible by {self.p}; no inverse modulo {self.modulus}")
        return ModPrimePower(self.p, self.M, pow(self.residue, -1, self.modulus))

    def __truediv__(self, other: Any) -> "ModPrimePower":
        return self * ModPrimePower(self.p, self.M, self._coerce(other)).inverse()

    def __eq__(self, other: object) -> bool:
        if isinstance(other, ModPrimePower):
            return (self.p, self.M, self.residue) == (other.p, other.M, other.residue)
        if isinstance(other, (int, Fraction)):
            try:
                return self.residue == self._coerce(other)
            except ModularError:
                return False
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.p, self.M, self.residue))

    def __int__(self) -> int:
        return self.residue


class ModPolynomial:
    """Polynomial over ``Z/p^M`` stored densely: degree < ``size`` in each variable."""

    __slots__ = ("variables", "p", "M", "size", "coeffs")

    def __init__(self, variables: Sequence[str], p: int, M: int, size: int, coeffs: np.ndarray):
        self.variables = tuple(variables)
        self.p, self.M, self.size = p, M, size
        self.coeffs = np.asarray(coeffs).reshape((size,) * len(self.variables)) % (p ** M)

    @property
    def modulus(self) -> int:
        return self.p ** self.M

    def _check(self, other: "ModPolynomial") -> None:
        if (self.variables, self.p, self.M, self.size) != (other.variables, other.p, other.M, other.size):
            raise ValueError("incompatible modular polynomials")

    def _new(self, coeffs: np.ndarray) -> "ModPolynomial":
        return ModPolynomial(self.variables, self.p, self.M, self.size, coeffs)

    def __add__(self, other: "ModPolynomial") -> "ModPolynomial":
        self._check(other)
        return self._new(self.coeffs + other.coeffs)

    def __sub__(self, other: "ModPolynomial") -> "ModPolynomial":
        self._check(other)
        return self._new(self.coeffs - other.coeffs)

    def scale(self, c: int) -> "ModPolynomial":
        return self._new(self.coeffs * (int(c) % self.modulus))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ModPolynomial):
            return NotImplemented
        return (self.variables, self.modulus) == (other.variables, other.modulus) and \
            self.to_dict() == other.to_dict()

    def is_zero(self) -> bool:
        return not np.any(self.coeffs)

    def to_dict(self) -> dict[tuple[int, ...], int]:
        if not self.variables:
            r = int(self.coeffs.reshape(-1)[0])
            return {(): r} if r else {}
        idx = np.argwhere(self.coeffs != 0)
        return {tuple(int(e) for e in i): int(self.coeffs[tuple(i)]) for i in idx}

    def constant(self) -> int:
        return int(self.coeffs.reshape(-1)[0])

    def first_difference(self, other: "ModPolynomial") -> dict[str, Any] | None:
        d = (self - other).to_dict()
        if not d:
            return None
        mono = min(d)
        lhs = self.to_dict().get(mono, 0)
        rhs = other.to_dict().get(mono, 0)
        return {"monomial": list(mono), "variables": list(self.variables), "lhs": lhs, "rhs": rhs}

    def __str__(self) -> str:
        d = self.to_dict()
        if not d:
            return f"0 (mod {self.p}^{self.M})"
        parts = []
        for mono, c in sorted(d.items()):
            fac = "*".join(v if e == 1 else f"{v}^{e}" for v, e in zip(self.variables, mono) if e)
            parts.append(f"{c}*{fac}" if fac else str(c))
        return " + ".join(parts) + f" (mod {self.p}^{self.M})"

    __repr__ = __str__


# -- arguments ---------------------------------------------------------------

def _affine(x: Any, variables: tuple[str, ...], modulus: int) -> tuple[int, int, int]:
    """``(const, var_position, coef)`` for an integer, a symbol, or an affine polynomial in one variable."""
    if isinstance(x, str):
        x = exact(x)
    if is_symbolic(x):
        x = RationalPolynomial.var(str(x))
    if isinstance(x, RationalPolynomial):
        used = [v for v in x.variables if any(m[x.variables.index(v)] for m in x.terms)]
        if len(used) > 1 or x.degree() > 1:
            raise ValueError(f"argument {x} is not affine in a single variable")
        const = x.coefficient((0,) * len(x.variables))
        if not used:
            return _residue(const, modulus), -1, 0
        name = used[0]
        mono = tuple(1 if v == name else 0 for v in x.variables)
        return _residue(const, modulus), variables.index(name), _residue(x.coefficient(mono), modulus)
    return _residue(Fraction(exact(x)), modulus), -1, 0


def _residue(x: Fraction, modulus: int) -> int:
    x = Fraction(x)
    try:
        return x.numerator * pow(x.denominator, -1, modulus) % modulus
    except ValueError as exc:
        raise ModularError(f"{x} is not defined modulo {modulus}") from exc


def _variables(args: Iterable[Any]) -> tuple[str, ...]:
    out: list[str] = []
    for a in args:
        if isinstance(a, str):
            a = exact(a)
        names = a.variables if isinstance(a, RationalPolynomial) else ((str(a),) if is_symbolic(a) else ())
        if isinstance(a, RationalPolynomial):
            names = tuple(v for v in names if any(m[a.variables.index(v)] for m in a.terms))
        for n in names:
            if n not in out:
                out.append(n)
    return tuple(out)


def li_truncated_mod(p: int, M: int, v: VarIndex, star: bool = False, *,
                     variables: Sequence[str] | None = None, N: int | None = None,
                     backend: str | None = None) -> ModPolynomial:
    """``Li_{<p}(v)`` (star variant when ``star``) with every ``1/n^k`` taken as a modular inverse mod ``p^M``."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if M < 1:
        raise ValueError("M must be >= 1")
    names = tuple(variables) if variables is not None else _variables(v.args)
    N = p if N is None else N
    modulus = p ** M
    aff = [_affine(a, names, modulus) for a in v.args]
    flat = kernels.nested_sum_mod(v.index, [a[0] for a in aff], [a[1] for a in aff], [a[2] for a in aff],
                                  len(names), N, modulus, star, backend=backend)
    return ModPolynomial(names, p, M, N, flat)


def _lift(poly: ModPolynomial, M: int) -> ModPolynomial:
    """Embed a residue mod ``p^m`` into ``Z/p^M`` through its integer representative."""
    return ModPolynomial(poly.variables, poly.p, M, poly.size, poly.coeffs.astype(object))


def curly_L_A_truncated(p: int, M: int, v: VarIndex, *, variables: Sequence[str] | None = None,
                        backend: str | None = None) -> ModPolynomial:
    """``sum_{n<M} [Li*(z, {1}^n; k, {1}^n) - 1/2 Li*(1, z_2, ..., {1}^n; k, {1}^n)] p^n`` mod ``p^M``.

    The ``n``-th bracket only matters modulo ``p^(M-n)``, so it is computed there.
    """
    if p == 2:
        raise ValueError("p = 2 is excluded: the combination needs 1/2")
    if not v.index:
        raise ValueError("the index must be nonempty")
    names = tuple(variables) if variables is not None else _variables(v.args)
    total = ModPolynomial(names, p, M, p, np.zeros(p ** len(names), dtype=object))
    for n in range(M):
        digits = M - n
        ext = v.extend_ones(n)
        head = VarIndex((1,) + ext.args[1:], ext.index)
        a = li_truncated_mod(p, digits, ext, True, variables=names, backend=backend)
        b = li_truncated_mod(p, digits, head, True, variables=names, backend=backend)
        half = pow(2, -1, p ** digits)
        bracket = (a - b.scale(half))
        total = total + _lift(bracket, M).scale(p ** n)
    return total


def duality_pair(ks: Sequence[Sequence[int]], zs: Sequence[Any]) -> tuple[VarIndex, VarIndex]:
    """The two VarIndexes compared by the finite duality: ``z_i`` with ``k_i`` against ``1 - z_i`` with ``k_i^vee``."""
    if len(ks) != len(zs) or not ks:
        raise ValueError("need as many arguments as indices, at least one")
    lhs_args: list[Any] = []
    lhs_idx: list[int] = []
    rhs_args: list[Any] = []
    rhs_idx: list[int] = []
    for k, z in zip(ks, zs):
        k = as_index(k)
        kv = vee(k)
        z = exact(z) if isinstance(z, str) else z
        zpoly = RationalPolynomial.var(str(z)) if is_symbolic(z) else z
        lhs_args += [zpoly] + [1] * (len(k) - 1)
        lhs_idx += k
        rhs_args += [1 - zpoly] + [1] * (len(kv) - 1)
        rhs_idx += kv
    return VarIndex(tuple(lhs_args), tuple(lhs_idx)), VarIndex(tuple(rhs_args), tuple(rhs_idx))


def _z_names(zs: Sequence[Any]) -> tuple[str, ...]:
    names: list[str] = []
    for z in zs:
        z = exact(z) if isinstance(z, str) else z
        if is_symbolic(z) and str(z) not in names:
            names.append(str(z))
    return tuple(names)


def check_fmpl_duality(p: int, M: int, ks: Sequence[Sequence[int]], zs: Sequence[Any], *,
                       backend: str | None = None) -> VerificationReport:
    start = time.perf_counter()
    lhs_v, rhs_v = duality_pair(ks, zs)
    names = _z_names(zs)
    lhs = curly_L_A_truncated(p, M, lhs_v, variables=names, backend=backend)
    rhs = curly_L_A_truncated(p, M, rhs_v, variables=names, backend=backend)
    witness = lhs.first_difference(rhs)
    params = {"p": p, "M": M, "indices": [format_index(as_index(k)) for k in ks],
              "args": [str(z) for z in zs]}
    return stamp(VerificationReport("finite-duality", params, PASS if witness is None else FAIL,
                                    witness=witness), start)


def fmzv_star_series(p: int, M: int, k: Index, *, backend: str | None = None) -> int:
    """``sum_{n<M} zeta*_{<p}(k, {1}^n) p^n`` mod ``p^M``."""
    total = 0
    modulus = p ** M
    for n in range(M):
        ext = VarIndex.ones(tuple(k) + (1,) * n)
        total += li_truncated_mod(p, M - n, ext, True, backend=backend).constant() * p ** n
    return total % modulus


def check_fmzv_duality(p: int, M: int, k: Sequence[int], *, backend: str | None = None) -> VerificationReport:
    start = time.perf_counter()
    if p == 2:
        raise ValueError("p = 2 is excluded")
    k = as_index(k)
    kv = vee(k)
    lhs = fmzv_star_series(p, M, k, backend=backend)
    rhs = (-fmzv_star_series(p, M, kv, backend=backend)) % p ** M
    params = {"p": p, "M": M, "index": format_index(k), "dual": format_index(kv)}
    witness = None if lhs == rhs else {"lhs": lhs, "rhs": rhs, "modulus": p ** M}
    return stamp(VerificationReport("fmzv-duality", params, PASS if witness is None else FAIL,
                                    witness=witness), start)
