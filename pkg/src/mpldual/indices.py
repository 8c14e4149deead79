"""Indices, indices with variables, and the two dualities on them.

Component order follows the convention ``0 < n_1 < ... < n_r`` with the
admissibility condition on the *last* component, so ``zeta(1, 2)`` is the
convergent value ``sum 1/(n_1 n_2^2)``.  Use :func:`reverse_index` to move
between this convention and the reversed one common in the literature.
"""
from __future__ import annotations

from itertools import combinations
from typing import Any, Iterator, NamedTuple, Sequence

Index = tuple[int, ...]


class NotAdmissibleError(ValueError):
    """Raised when an operation needs an admissible index."""


class EmptyIndexError(ValueError):
    """Raised when an operation needs a nonempty index."""


def as_index(parts: Sequence[int]) -> Index:
    k = tuple(int(p) for p in parts)
    if any(p < 1 for p in k):
        raise ValueError(f"index parts must be positive integers: {parts!r}")
    return k


def parse_index(text: str) -> Index:
    """Parse ``"1,2"``; ``"-"`` (or blank) is the empty index."""
    text = text.strip().strip("()")
    if text in ("", "-", "∅"):
        return ()
    return as_index(int(p) for p in text.split(","))


def format_index(k: Index) -> str:
    return ",".join(map(str, k)) if k else "-"


def weight(k: Index) -> int:
    return sum(k)


def depth(k: Index) -> int:
    return len(k)


def is_admissible(k: Index) -> bool:
    return not k or k[-1] >= 2


def ones(n: int) -> Index:
    return (1,) * n


def reverse_index(k: Index) -> Index:
    return tuple(reversed(k))


def blocks(k: Index) -> list[tuple[int, int]]:
    """Split an admissible index into ``({1}^(a-1), b+1)`` blocks, returning ``[(a, b), ...]``."""
    if not is_admissible(k):
        raise NotAdmissibleError(f"index {k} is not admissible")
    out = []
    run = 0
    for part in k:
        if part == 1:
            run += 1
        else:
            out.append((run + 1, part - 1))
            run = 0
    return out


def dagger(k: Index) -> Index:
    """Dual of an admissible index, computed from its block decomposition."""
    dual: list[int] = []
    for a, b in reversed(blocks(k)):
        dual.extend((1,) * (b - 1))
        dual.append(a + 1)
    return tuple(dual)


def vee(k: Index) -> Index:
    """The index ``(l_1, ..., l_s)`` with ``(l_s, ..., l_2, l_1 + 1) = (k_1, ..., k_r + 1)^dagger``."""
    if not k:
        raise EmptyIndexError("vee is undefined on the empty index")
    m = dagger(k[:-1] + (k[-1] + 1,))
    return (m[-1] - 1,) + tuple(reversed(m[:-1]))


def compositions(n: int) -> Iterator[Index]:
    """All indices of weight ``n`` in lexicographic order."""
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            yield (first,) + rest


def indices_up_to(max_weight: int, max_depth: int | None = None, min_weight: int = 1) -> list[Index]:
    out = []
    for w in range(min_weight, max_weight + 1):
        for k in compositions(w):
            if max_depth is None or len(k) <= max_depth:
                out.append(k)
    return out


def admissible_indices(w: int) -> list[Index]:
    """All admissible indices of weight ``w``, ordered by depth then lexicographically."""
    return sorted((k for k in compositions(w) if is_admissible(k)), key=lambda k: (len(k), k))


class VarIndex(NamedTuple):
    """An index together with one argument per component."""

    args: tuple[Any, ...]
    index: Index

    @classmethod
    def of(cls, args: Sequence[Any], index: Sequence[int]) -> "VarIndex":
        k = as_index(index)
        if len(args) != len(k):
            raise ValueError(f"{len(args)} arguments for an index of depth {len(k)}")
        return cls(tuple(args), k)

    @classmethod
    def ones(cls, index: Sequence[int]) -> "VarIndex":
        k = as_index(index)
        return cls((1,) * len(k), k)

    @property
    def depth(self) -> int:
        return len(self.index)

    @property
    def weight(self) -> int:
        return sum(self.index)

    def extend_ones(self, n: int) -> "VarIndex":
        """``(z, {1}^n; k, {1}^n)``."""
        return VarIndex(self.args + (1,) * n, self.index + (1,) * n)


def star_expansion(v: VarIndex) -> list[VarIndex]:
    """Non-star VarIndexes whose sum equals the star value of ``v``.

    One term per chain ``0 = i_0 < ... < i_{d+1} = r``: the parts inside each
    block are summed and the block keeps the argument of its first slot.
    """
    r = v.depth
    if r == 0:
        raise EmptyIndexError("star expansion needs depth >= 1")
    out = []
    for d in range(r):
        for cuts in combinations(range(1, r), d):
            bounds = (0,) + cuts + (r,)
            args = tuple(v.args[bounds[c]] for c in range(d + 1))
            parts = tuple(sum(v.index[bounds[c]:bounds[c + 1]]) for c in range(d + 1))
            out.append(VarIndex(args, parts))
    return out
