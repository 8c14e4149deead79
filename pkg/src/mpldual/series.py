"""Power series in one formal variable, truncated at a fixed order."""
from __future__ import annotations

from typing import Any, Callable, Iterable, Sequence


class TruncatedSeries:
    """``sum_{n < order} c_n x^n`` with coefficients from any ring.

    Arithmetic truncates at the smaller of the two orders.
    """

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs: Iterable[Any], var: str = "t"):
        self.coeffs = list(coeffs)
        self.var = var

    @classmethod
    def zeros(cls, order: int, zero: Any = 0, var: str = "t") -> "TruncatedSeries":
        return cls([zero] * order, var)

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, n: int) -> Any:
        return self.coeffs[n]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def truncate(self, order: int) -> "TruncatedSeries":
        return TruncatedSeries(self.coeffs[:order], self.var)

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        m = min(self.order, other.order)
        return TruncatedSeries([a + b for a, b in zip(self.coeffs[:m], other.coeffs[:m])], self.var)

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        m = min(self.order, other.order)
        return TruncatedSeries([a - b for a, b in zip(self.coeffs[:m], other.coeffs[:m])], self.var)

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries([-a for a in self.coeffs], self.var)

    def scale(self, c: Any) -> "TruncatedSeries":
        return TruncatedSeries([c * a for a in self.coeffs], self.var)

    def __mul__(self, other: Any) -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return self.scale(other)
        m = min(self.order, other.order)
        out = []
        for n in range(m):
            acc = self.coeffs[0] * other.coeffs[n]
            for i in range(1, n + 1):
                acc = acc + self.coeffs[i] * other.coeffs[n - i]
            out.append(acc)
        return TruncatedSeries(out, self.var)

    __rmul__ = scale

    def shift(self, n: int) -> "TruncatedSeries":
        """Multiply by ``x^n`` keeping the order."""
        if n == 0:
            return self
        zero = self.coeffs[0] - self.coeffs[0] if self.coeffs else 0
        return TruncatedSeries(([zero] * n + self.coeffs)[: self.order], self.var)

    def map(self, f: Callable[[Any], Any]) -> "TruncatedSeries":
        return TruncatedSeries([f(c) for c in self.coeffs], self.var)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __repr__(self) -> str:
        return f"TruncatedSeries({self.coeffs!r}, var={self.var!r})"


def geometric_tail(order: int, one: Any = 1, var: str = "X") -> TruncatedSeries:
    """``X/(1 - X) = X + X^2 + ...`` truncated at ``order``."""
    zero = one - one
    return TruncatedSeries([zero] + [one] * (order - 1) if order else [], var)


def series_from(coeffs: Sequence[Any], order: int, zero: Any = 0, var: str = "t") -> TruncatedSeries:
    c = list(coeffs[:order])
    return TruncatedSeries(c + [zero] * (order - len(c)), var)
