"""Integer relations among high-precision reals and zeta(2)-multiple certificates."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Any, Sequence

import mpmath

from .indices import Index, admissible_indices, format_index
from .numeric import mzv, working_dps

FOUND = "FOUND"
NOT_FOUND = "NOT-FOUND"


class PrecisionError(ArithmeticError):
    """Too few digits to search for relations of the requested height."""


def tolerance(digits: int):
    return mpmath.mpf(10) ** (-digits + 12)


def _check_precision(n: int, digits: int, height_bound: int) -> None:
    # a relation of height H among n numbers is meaningful only with more than n*log10(H) digits
    need = n * math.log10(max(height_bound, 2)) + 12
    if digits < need:
        raise PrecisionError(f"{n} values at height {height_bound} need at least {math.ceil(need)} digits, "
                             f"got {digits}")


def find_relation(values: Sequence[Any], digits: int, height_bound: int) -> tuple[int, ...] | None:
    """Integers ``c`` with ``|c_i| <= height_bound`` and ``|sum c_i v_i| < 10^(-digits+12)``, or None.

    The vector is normalized so its first nonzero entry is positive.
    """
    if len(values) < 2:
        raise ValueError("need at least two values")
    _check_precision(len(values), digits, height_bound)
    tol = tolerance(digits)
    with mpmath.workdps(working_dps(digits)):
        xs = [mpmath.mpf(v) for v in values]
        # a value that is already negligible is its own relation
        for i, x in enumerate(xs):
            if abs(x) < tol:
                return tuple(1 if j == i else 0 for j in range(len(xs)))
        # pslq bounds the Euclidean norm; entries <= H allow norms up to H*sqrt(n)
        norm_bound = math.isqrt(len(xs) * height_bound ** 2) + 1
        rel = mpmath.pslq(xs, tol=tol, maxcoeff=norm_bound, maxsteps=20_000)
        if rel is None:
            return None
        rel = [int(c) for c in rel]
        if max(abs(c) for c in rel) > height_bound or not any(rel):
            return None
        if abs(mpmath.fsum(c * x for c, x in zip(rel, xs))) >= tol:
            return None
    if next(c for c in rel if c) < 0:
        rel = [-c for c in rel]
    return tuple(rel)


def mzv_spanning_set(weight: int) -> list[Index]:
    """All admissible indices of the given weight in a fixed order."""
    if weight < 2:
        raise ValueError("weight must be at least 2")
    return admissible_indices(weight)


@lru_cache(maxsize=64)
def _independent(weight: int, digits: int, height_bound: int) -> tuple[Index, ...]:
    """Greedy subset of the spanning set with no relation among ``zeta(2) zeta(b)``."""
    chosen: list[Index] = []
    values: list[Any] = []
    for b in mzv_spanning_set(weight):
        v = mzv(b, digits)
        if values and find_relation(values + [v], digits, height_bound) is not None:
            continue
        chosen.append(b)
        values.append(v)
    return tuple(chosen)


@dataclass
class RelationCertificate:
    """``target = zeta(2) * sum q_j zeta(b_j)`` at the stated precision, or the failure to find it."""

    target: str
    weight: int
    status: str
    basis: list[Index] = field(default_factory=list)
    coefficients: list[Fraction] = field(default_factory=list)
    residual: Any = None
    digits: int = 0
    height_bound: int = 0

    @property
    def found(self) -> bool:
        return self.status == FOUND

    def to_dict(self) -> dict[str, Any]:
        return {
            "target": self.target,
            "weight": self.weight,
            "status": self.status,
            "basis": [format_index(b) for b in self.basis],
            "coefficients": [str(q) for q in self.coefficients],
            "residual": None if self.residual is None else mpmath.nstr(self.residual, 5),
            "digits": self.digits,
            "height_bound": self.height_bound,
        }


def _basis_values(basis: Sequence[Index], digits: int) -> list[Any]:
    z2 = mzv((2,), digits)
    with mpmath.workdps(working_dps(digits)):
        return [z2 * mzv(b, digits) if b else z2 for b in basis]


def verify_certificate(value: Any, cert: RelationCertificate, digits: int):
    """Residual ``|value - zeta(2) sum q_j zeta(b_j)|`` recomputed from scratch."""
    with mpmath.workdps(working_dps(digits)):
        total = mpmath.mpf(0)
        for q, v in zip(cert.coefficients, _basis_values(cert.basis, digits)):
            total += mpmath.mpf(q.numerator) / q.denominator * v
        return abs(mpmath.mpmathify(value) - total)


def zeta2_membership(value: Any, weight: int, digits: int, height_bound: int,
                     target: str = "") -> RelationCertificate:
    """Certify ``value`` in ``zeta(2) * span{zeta(b) : b admissible, wt(b) = weight - 2}``.

    Weight 2 uses the basis ``{1}``; weights below 2 and weight 3 have an empty
    basis, so only a negligible value certifies.
    """
    tol = tolerance(digits)
    cert = RelationCertificate(target, weight, NOT_FOUND, digits=digits, height_bound=height_bound)
    with mpmath.workdps(working_dps(digits)):
        value = mpmath.mpmathify(value)
        if abs(value) < tol:
            cert.status, cert.residual = FOUND, abs(value)
            return cert
    if weight < 2 or weight == 3:
        cert.residual = abs(value)
        return cert
    basis = [()] if weight == 2 else list(_independent(weight - 2, digits, height_bound))
    rel = find_relation([value] + _basis_values(basis, digits), digits, height_bound)
    if rel is None or rel[0] == 0:
        return cert
    coeffs = [Fraction(-c, rel[0]) for c in rel[1:]]
    if any(abs(q.numerator) > height_bound or q.denominator > height_bound for q in coeffs):
        return cert
    keep = [(b, q) for b, q in zip(basis, coeffs) if q]
    cert.basis = [b for b, _ in keep]
    cert.coefficients = [q for _, q in keep]
    cert.residual = verify_certificate(value, cert, digits)
    if cert.residual < tol:
        cert.status = FOUND
    return cert
