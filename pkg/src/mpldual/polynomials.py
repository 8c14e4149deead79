"""Sparse multivariate polynomials with exact rational coefficients."""
from __future__ import annotations

from fractions import Fraction
from typing import Any, Iterable, Mapping, Sequence

Monomial = tuple[int, ...]


class RationalPolynomial:
    """Polynomial over Q in an ordered tuple of named variables.

    Terms are stored as ``{exponent vector: Fraction}`` without zero
    coefficients, so equality is a plain dictionary comparison.  Binary
    operations align variable lists by union (left operand's order first).
    """

    __slots__ = ("variables", "terms")

    def __init__(self, variables: Sequence[str] = (), terms: Mapping[Monomial, Any] | None = None):
        self.variables: tuple[str, ...] = tuple(variables)
        self.terms: dict[Monomial, Fraction] = {}
        if terms:
            n = len(self.variables)
            for mono, c in terms.items():
                if len(mono) != n:
                    raise ValueError(f"monomial {mono} does not match variables {self.variables}")
                c = Fraction(c)
                if c:
                    self.terms[tuple(mono)] = self.terms.get(tuple(mono), 0) + c
            self.terms = {m: c for m, c in self.terms.items() if c}

    # -- constructors --
    @classmethod
    def constant(cls, c: Any, variables: Sequence[str] = ()) -> "RationalPolynomial":
        return cls(variables, {(0,) * len(variables): c})

    @classmethod
    def var(cls, name: str, variables: Sequence[str] | None = None) -> "RationalPolynomial":
        variables = tuple(variables) if variables is not None else (name,)
        mono = tuple(1 if v == name else 0 for v in variables)
        return cls(variables, {mono: 1})

    @classmethod
    def coerce(cls, x: Any, variables: Sequence[str] = ()) -> "RationalPolynomial":
        if isinstance(x, RationalPolynomial):
            return x.with_variables(tuple(variables) + tuple(v for v in x.variables if v not in variables))
        return cls.constant(x, variables)

    # -- variable handling --
    def with_variables(self, variables: Sequence[str]) -> "RationalPolynomial":
        variables = tuple(variables)
        if variables == self.variables:
            return self
        missing = [v for v in self.variables if v not in variables]
        if missing:
            raise ValueError(f"cannot drop variables {missing}")
        pos = [variables.index(v) for v in self.variables]
        out = RationalPolynomial(variables)
        for mono, c in self.terms.items():
            new = [0] * len(variables)
            for p, e in zip(pos, mono):
                new[p] = e
            out.terms[tuple(new)] = c
        return out

    def _align(self, other: Any) -> tuple["RationalPolynomial", "RationalPolynomial"]:
        if not isinstance(other, RationalPolynomial):
            return self, RationalPolynomial.constant(other, self.variables)
        if other.variables == self.variables:
            return self, other
        union = self.variables + tuple(v for v in other.variables if v not in self.variables)
        return self.with_variables(union), other.with_variables(union)

    # -- arithmetic --
    def __add__(self, other: Any) -> "RationalPolynomial":
        a, b = self._align(other)
        out = RationalPolynomial(a.variables)
        out.terms = dict(a.terms)
        for m, c in b.terms.items():
            s = out.terms.get(m, 0) + c
            if s:
                out.terms[m] = s
            else:
                out.terms.pop(m, None)
        return out

    __radd__ = __add__

    def __neg__(self) -> "RationalPolynomial":
        out = RationalPolynomial(self.variables)
        out.terms = {m: -c for m, c in self.terms.items()}
        return out

    def __sub__(self, other: Any) -> "RationalPolynomial":
        return self + (-RationalPolynomial.coerce(other, self.variables))

    def __rsub__(self, other: Any) -> "RationalPolynomial":
        return (-self) + other

    def __mul__(self, other: Any) -> "RationalPolynomial":
        if not isinstance(other, RationalPolynomial):
            s = Fraction(other)
            out = RationalPolynomial(self.variables)
            if s:
                out.terms = {m: c * s for m, c in self.terms.items()}
            return out
        a, b = self._align(other)
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in a.terms.items():
            for m2, c2 in b.terms.items():
                m = tuple(x + y for x, y in zip(m1, m2))
                out[m] = out.get(m, 0) + c1 * c2
        res = RationalPolynomial(a.variables)
        res.terms = {m: c for m, c in out.items() if c}
        return res

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "RationalPolynomial":
        out = RationalPolynomial.constant(1, self.variables)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other: object) -> bool:
        if isinstance(other, RationalPolynomial):
            a, b = self._align(other)
            return a.terms == b.terms
        if isinstance(other, (int, Fraction)):
            return self == RationalPolynomial.constant(other, self.variables)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    # -- inspection --
    def degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def coefficient(self, mono: Monomial) -> Fraction:
        return self.terms.get(tuple(mono), Fraction(0))

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        return sorted(self.terms.items())

    def substitute(self, values: Mapping[str, Any]) -> "RationalPolynomial":
        """Replace some variables by rationals or polynomials."""
        rest = tuple(v for v in self.variables if v not in values)
        out = RationalPolynomial(rest)
        for mono, c in self.terms.items():
            term = RationalPolynomial(rest, {tuple(e for v, e in zip(self.variables, mono) if v not in values): c})
            for v, e in zip(self.variables, mono):
                if v in values and e:
                    term = term * (RationalPolynomial.coerce(values[v], rest) ** e)
            out = out + term
        return out.with_variables(rest) if out.variables != rest else out

    def evaluate(self, values: Mapping[str, Any]) -> Fraction:
        total = Fraction(0)
        for mono, c in self.terms.items():
            t = c
            for v, e in zip(self.variables, mono):
                if e:
                    t *= Fraction(values[v]) ** e
            total += t
        return total

    def reduce_mod(self, modulus: int) -> dict[Monomial, int]:
        """Coefficientwise image in Z/modulus; denominators must be invertible."""
        out = {}
        for m, c in self.terms.items():
            r = c.numerator * pow(c.denominator, -1, modulus) % modulus
            if r:
                out[m] = r
        return out

    def to_json(self) -> dict:
        return {"variables": list(self.variables),
                "terms": [[list(m), str(c)] for m, c in self.sorted_terms()]}

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for mono, c in self.sorted_terms():
            factors = [v if e == 1 else f"{v}^{e}" for v, e in zip(self.variables, mono) if e]
            if not factors:
                parts.append(str(c))
            elif c == 1:
                parts.append("*".join(factors))
            elif c == -1:
                parts.append("-" + "*".join(factors))
            else:
                parts.append(f"{c}*" + "*".join(factors))
        return " + ".join(parts).replace("+ -", "- ")

    __repr__ = __str__


def variables_of(items: Iterable[Any]) -> tuple[str, ...]:
    """Ordered variable names appearing in a sequence of arguments (polynomials or sympy symbols)."""
    out: list[str] = []
    for x in items:
        names = x.variables if isinstance(x, RationalPolynomial) else (
            (str(x),) if type(x).__module__.startswith("sympy") else ())
        for n in names:
            if n not in out:
                out.append(n)
    return tuple(out)
