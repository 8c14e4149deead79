"""Exact argument values: rationals, Gaussian rationals, symbols and infinity."""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Union

import mpmath


@dataclass(frozen=True)
class GaussianRational:
    """``re + im*i`` with rational parts; use :func:`exact` to build one."""

    re: Fraction
    im: Fraction

    def __add__(self, other: Any) -> "Exact":
        o = exact(other)
        return exact_complex(self.re + real_part(o), self.im + imag_part(o))

    __radd__ = __add__

    def __neg__(self) -> "Exact":
        return exact_complex(-self.re, -self.im)

    def __sub__(self, other: Any) -> "Exact":
        return self + (-exact(other))

    def __rsub__(self, other: Any) -> "Exact":
        return exact(other) + (-self)

    def __mul__(self, other: Any) -> "Exact":
        o = exact(other)
        a, b, c, d = self.re, self.im, real_part(o), imag_part(o)
        return exact_complex(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other: Any) -> "Exact":
        return self * reciprocal(exact(other))

    def __rtruediv__(self, other: Any) -> "Exact":
        return exact(other) * reciprocal(self)

    def __abs__(self) -> float:
        return abs(complex(float(self.re), float(self.im)))

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def __str__(self) -> str:
        sign = "+" if self.im >= 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"


class _Infinity:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INFINITY"

    __str__ = lambda self: "oo"  # noqa: E731

    def __reduce__(self):
        return (_Infinity, ())


INFINITY = _Infinity()

Exact = Union[Fraction, GaussianRational]


def exact_complex(re_: Fraction, im: Fraction) -> Exact:
    return Fraction(re_) if im == 0 else GaussianRational(Fraction(re_), Fraction(im))


def exact(x: Any) -> Any:
    """Normalize ints, Fractions, complex numbers and strings to exact values.

    Symbols (sympy expressions) and :data:`INFINITY` pass through unchanged.
    """
    if isinstance(x, (Fraction, GaussianRational)) or x is INFINITY:
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not an argument value")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, complex):
        return exact_complex(Fraction(x.real), Fraction(x.imag))
    if isinstance(x, float):
        return Fraction(x)
    if isinstance(x, str):
        return parse_value(x)
    if is_symbolic(x):
        return x
    raise TypeError(f"cannot interpret {x!r} as an exact value")


def is_symbolic(x: Any) -> bool:
    return type(x).__module__.startswith("sympy")


def real_part(x: Exact) -> Fraction:
    return x.re if isinstance(x, GaussianRational) else Fraction(x)


def imag_part(x: Exact) -> Fraction:
    return x.im if isinstance(x, GaussianRational) else Fraction(0)


def reciprocal(a: Any) -> Any:
    """``1/a`` with ``1/0 = oo`` and ``1/oo = 0``."""
    if a is INFINITY:
        return Fraction(0)
    if is_symbolic(a):
        return 1 / a
    a = exact(a)
    if a == 0:
        return INFINITY
    if isinstance(a, GaussianRational):
        n = a.re * a.re + a.im * a.im
        return exact_complex(a.re / n, -a.im / n)
    return 1 / a


def one_minus(a: Any) -> Any:
    if a is INFINITY:
        return INFINITY
    if is_symbolic(a):
        return 1 - a
    return 1 - exact(a)


def abs2(a: Exact) -> Fraction:
    return real_part(a) ** 2 + imag_part(a) ** 2


def to_mp(a: Any):
    """Convert an exact value to an mpmath number at the current precision."""
    if isinstance(a, GaussianRational):
        return mpmath.mpc(mpmath.mpf(a.re.numerator) / a.re.denominator,
                          mpmath.mpf(a.im.numerator) / a.im.denominator)
    if isinstance(a, Fraction):
        return mpmath.mpf(a.numerator) / a.denominator
    if isinstance(a, int):
        return mpmath.mpf(a)
    if a is INFINITY or is_symbolic(a):
        raise TypeError(f"{a!r} has no numerical value")
    return mpmath.mpmathify(a)


_RAT = r"[+-]?\d+(?:/\d+)?"
_COMPLEX = re.compile(rf"^({_RAT})?(?:([+-])((?:\d+(?:/\d+)?)?)\*?i)$")


def parse_value(text: str) -> Any:
    """Parse ``"p/q"``, ``"p/q+r/s i"``, ``"i"``, ``"oo"`` or a symbol name like ``"z1"``."""
    s = text.replace(" ", "")
    if s in ("oo", "inf", "∞"):
        return INFINITY
    if re.fullmatch(_RAT, s):
        return Fraction(s)
    if s in ("i", "+i", "-i"):
        return exact_complex(Fraction(0), Fraction(-1 if s.startswith("-") else 1))
    m = _COMPLEX.match(s)
    if m:
        re_part = Fraction(m.group(1)) if m.group(1) else Fraction(0)
        mag = Fraction(m.group(3)) if m.group(3) else Fraction(1)
        return exact_complex(re_part, -mag if m.group(2) == "-" else mag)
    if re.fullmatch(r"[A-Za-z_]\w*", s):
        import sympy

        return sympy.Symbol(s)
    raise ValueError(f"cannot parse value {text!r}")


def format_value(a: Any) -> str:
    if isinstance(a, Fraction):
        return str(a)
    return str(a)


def sort_key(a: Any) -> tuple:
    """Total order on letters, used for canonical output."""
    if isinstance(a, Fraction):
        return (0, a, Fraction(0), "")
    if isinstance(a, GaussianRational):
        return (0, a.re, a.im, "")
    if a is INFINITY:
        return (1, Fraction(0), Fraction(0), "")
    return (2, Fraction(0), Fraction(0), str(a))
