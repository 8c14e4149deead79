"""Words in the letters ``e_a`` and their shuffle algebra.

A word is a tuple of letters; the letter ``a`` stands for the one-form
``dt/(t - a)``.  Letters are exact values from :mod:`mpldual.values`.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Any, Iterable, Iterator, Mapping

from .indices import Index, VarIndex
from .values import INFINITY, exact, is_symbolic, one_minus, reciprocal, sort_key

Word = tuple


def word(letters: Iterable[Any]) -> Word:
    return tuple(exact(a) for a in letters)


def word_key(w: Word) -> tuple:
    return (len(w), tuple(sort_key(a) for a in w))


class WordCombination:
    """Finite rational linear combination of words; zero coefficients are never stored."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Word, Any] | None = None):
        self.terms: dict[Word, Fraction] = {}
        if terms:
            for w, c in terms.items():
                self._add(tuple(w), Fraction(c))

    @classmethod
    def of(cls, w: Iterable[Any], coeff: Any = 1) -> "WordCombination":
        return cls({word(w): coeff})

    def _add(self, w: Word, c: Fraction) -> None:
        new = self.terms.get(w, 0) + c
        if new:
            self.terms[w] = new
        else:
            self.terms.pop(w, None)

    def __iter__(self) -> Iterator[tuple[Word, Fraction]]:
        return iter(sorted(self.terms.items(), key=lambda wc: word_key(wc[0])))

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __getitem__(self, w: Word) -> Fraction:
        return self.terms.get(tuple(w), Fraction(0))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, WordCombination):
            return self.terms == other.terms
        if isinstance(other, dict):
            return self == WordCombination(other)
        return NotImplemented

    def __add__(self, other: "WordCombination") -> "WordCombination":
        out = self.copy()
        for w, c in other.terms.items():
            out._add(w, c)
        return out

    def __sub__(self, other: "WordCombination") -> "WordCombination":
        return self + other * -1

    def __mul__(self, scalar: Any) -> "WordCombination":
        s = Fraction(scalar)
        out = WordCombination()
        if s:
            out.terms = {w: c * s for w, c in self.terms.items()}
        return out

    __rmul__ = __mul__

    def copy(self) -> "WordCombination":
        out = WordCombination()
        out.terms = dict(self.terms)
        return out

    def map_words(self, f) -> "WordCombination":
        """Apply a word-to-combination map linearly."""
        out = WordCombination()
        for w, c in self.terms.items():
            for w2, c2 in f(w).terms.items():
                out._add(w2, c * c2)
        return out

    def concat(self, other: "WordCombination") -> "WordCombination":
        out = WordCombination()
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                out._add(w1 + w2, c1 * c2)
        return out

    def shuffle(self, other: "WordCombination") -> "WordCombination":
        out = WordCombination()
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                for w, c in _shuffle_words(w1, w2).items():
                    out._add(w, c1 * c2 * c)
        return out

    def __repr__(self) -> str:
        body = ", ".join(f"{list(map(str, w))}: {c}" for w, c in self)
        return f"WordCombination({{{body}}})"


@lru_cache(maxsize=65536)
def _shuffle_words(w1: Word, w2: Word) -> dict[Word, int]:
    if not w1:
        return {w2: 1}
    if not w2:
        return {w1: 1}
    out: dict[Word, int] = {}
    for w, c in _shuffle_words(w1[:-1], w2).items():
        key = w + w1[-1:]
        out[key] = out.get(key, 0) + c
    for w, c in _shuffle_words(w1, w2[:-1]).items():
        key = w + w2[-1:]
        out[key] = out.get(key, 0) + c
    return out


def shuffle(w1: Iterable[Any], w2: Iterable[Any]) -> WordCombination:
    """Sum over all interleavings of ``w1`` and ``w2`` preserving their internal orders."""
    return WordCombination(_shuffle_words(word(w1), word(w2)))


def index_to_word(v: VarIndex) -> Word:
    """``e_{1/z_1} e_0^{k_1-1} ... e_{1/z_r} e_0^{k_r-1}``."""
    letters: list[Any] = []
    for z, k in zip(v.args, v.index):
        z = exact(z)
        if not is_symbolic(z) and z == 0:
            raise ZeroDivisionError("argument 0 has no letter 1/z")
        letters.append(reciprocal(z))
        letters.extend([Fraction(0)] * (k - 1))
    return tuple(letters)


def mzv_word(k: Index) -> Word:
    return index_to_word(VarIndex.ones(k))


def word_to_index(w: Word) -> Index:
    """Inverse of :func:`mzv_word` on words over {0, 1} that start with 1."""
    if w and w[0] != 1:
        raise ValueError("word must start with letter 1")
    parts: list[int] = []
    for a in w:
        if a == 1:
            parts.append(1)
        elif a == 0:
            parts[-1] += 1
        else:
            raise ValueError(f"letter {a} is not 0 or 1")
    return tuple(parts)


def word_dual(w: Iterable[Any]) -> Word:
    """Reverse the word and send each letter ``a`` to ``1 - a`` (the substitution ``t -> 1 - t``)."""
    return tuple(one_minus(a) for a in reversed(word(w)))


def word_invert(w: Iterable[Any]) -> WordCombination:
    """Letterwise ``e_a -> e_{1/a} - e_0`` (and ``e_0 -> -e_0``), expanded multilinearly.

    This is the pullback under ``t -> 1/t``.
    """
    out = WordCombination({(): 1})
    zero = Fraction(0)
    for a in word(w):
        if not is_symbolic(a) and a == 0:
            step = WordCombination({(zero,): -1})
        elif a is INFINITY:
            # e_oo = 0 as a form; its pullback is then e_0 - e_0 = 0 as well
            step = WordCombination()
        else:
            step = WordCombination({(reciprocal(a),): 1, (zero,): -1})
        out = out.concat(step)
    return out


def is_convergent_word(w: Word) -> bool:
    """True when ``w`` neither starts with ``e_0`` nor ends with ``e_1``."""
    return not w or (w[0] != 0 and w[-1] != 1)


# -- shuffle regularization -------------------------------------------------

Regularized = dict  # (i, j) -> WordCombination


def _trailing(w: Word, letter: Any) -> int:
    m = 0
    while m < len(w) and w[len(w) - 1 - m] == letter:
        m += 1
    return m


def _leading(w: Word, letter: Any) -> int:
    m = 0
    while m < len(w) and w[m] == letter:
        m += 1
    return m


def _reg_add(acc: dict, key: tuple[int, int], combo: WordCombination, scale: Fraction) -> None:
    cur = acc.get(key)
    cur = combo * scale if cur is None else cur + combo * scale
    if cur:
        acc[key] = cur
    else:
        acc.pop(key, None)


def _reg_shift(reg: dict, di: int, dj: int) -> dict:
    """Multiply by ``[0]^{sh di}/di! sh [1]^{sh dj}/dj!``."""
    out: dict = {}
    for (i, j), combo in reg.items():
        _reg_add(out, (i + di, j + dj), combo, Fraction(comb(i + di, i) * comb(j + dj, j)))
    return out


@lru_cache(maxsize=65536)
def _regularize(w: Word) -> tuple:
    one, zero = Fraction(1), Fraction(0)
    m = _trailing(w, one)
    if m:
        a = w[: len(w) - m]
        acc = _reg_shift(dict(_regularize(a)), 0, m)
        for u, c in _shuffle_words(a, (one,) * m).items():
            if u == w:
                c -= 1
            if c:
                for key, combo in _regularize(u):
                    _reg_add(acc, key, combo, Fraction(-c))
        return tuple(sorted(acc.items()))
    m = _leading(w, zero)
    if m:
        b = w[m:]
        acc = _reg_shift(dict(_regularize(b)), m, 0)
        for u, c in _shuffle_words((zero,) * m, b).items():
            if u == w:
                c -= 1
            if c:
                for key, combo in _regularize(u):
                    _reg_add(acc, key, combo, Fraction(-c))
        return tuple(sorted(acc.items()))
    return (((0, 0), WordCombination({w: 1})),)


def shuffle_regularize(w: Iterable[Any]) -> dict[tuple[int, int], WordCombination]:
    """Write ``w`` as a shuffle polynomial in the divergent one-letter words.

    Returns ``{(i, j): C}`` with
    ``w = sum C sh [0]^{sh i}/i! sh [1]^{sh j}/j!`` and every word of every
    ``C`` convergent.  Words starting with 1 only produce keys ``(0, j)``;
    sending both divergent generators to ``T`` and reading off the
    polynomial, the regularized value is the ``(0, 0)`` entry.
    """
    return {key: combo.copy() for key, combo in _regularize(word(w))}


def regularized_part(w: Iterable[Any]) -> WordCombination:
    """Constant term of :func:`shuffle_regularize` (both generators set to 0)."""
    return dict(_regularize(word(w))).get((0, 0), WordCombination()).copy()


def expand_regularized(reg: Mapping[tuple[int, int], WordCombination]) -> WordCombination:
    """Substitute the generators back and expand; recovers the regularized word exactly."""
    out = WordCombination()
    zero, one = Fraction(0), Fraction(1)
    for (i, j), combo in reg.items():
        gens = WordCombination({(zero,) * i: 1}).shuffle(WordCombination({(one,) * j: 1}))
        out = out + combo.shuffle(gens)
    return out


def t_polynomial(reg: Mapping[tuple[int, int], Any]) -> dict[int, Any]:
    """Collapse ``{(i, j): value}`` into coefficients of ``T^n`` with both generators equal to ``T``."""
    out: dict[int, Any] = {}
    for (i, j), value in reg.items():
        n = i + j
        term = value * Fraction(1, factorial(i) * factorial(j))
        out[n] = out[n] + term if n in out else term
    return out
