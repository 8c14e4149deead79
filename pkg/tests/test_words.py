from __future__ import annotations

from fractions import Fraction as F
from itertools import permutations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from mpldual.indices import VarIndex
from mpldual.values import INFINITY, exact_complex
from mpldual.words import (WordCombination, expand_regularized, index_to_word, is_convergent_word,
                           regularized_part, shuffle, shuffle_regularize, t_polynomial, word_dual,
                           word_invert)

letters = st.sampled_from([F(0), F(1), F(-1), F(2), F(1, 2)])
words = st.lists(letters, max_size=4).map(tuple)
binary = st.lists(st.sampled_from([F(0), F(1)]), max_size=5).map(tuple)


def brute_shuffle(u, v):
    """Count interleavings by choosing the positions of ``u`` among all slots."""
    out: dict = {}
    n = len(u) + len(v)
    for mask in range(2 ** n):
        pos = [i for i in range(n) if mask >> i & 1]
        if len(pos) != len(u):
            continue
        it_u, it_v = iter(u), iter(v)
        w = tuple(next(it_u) if i in pos else next(it_v) for i in range(n))
        out[w] = out.get(w, 0) + 1
    return WordCombination(out)


def test_index_to_word_examples():
    assert index_to_word(VarIndex.of([1], (2,))) == (1, 0)
    assert index_to_word(VarIndex.of([1, 1], (1, 2))) == (1, 1, 0)
    assert index_to_word(VarIndex.of([F(1, 2)], (1,))) == (2,)
    with pytest.raises(ZeroDivisionError):
        index_to_word(VarIndex.of([0], (1,)))


def test_word_dual_examples():
    assert word_dual((1, 0, 0)) == (1, 1, 0)
    assert word_dual(word_dual((1, 0, 1, 0))) == (1, 0, 1, 0)
    assert word_dual((1, 1, 0, -1)) == (2, 1, 0, 0)
    assert word_dual((INFINITY,)) == (INFINITY,)


def test_word_dual_complex_letter():
    a = exact_complex(F(1, 2), F(1))
    assert word_dual((a,)) == (exact_complex(F(1, 2), F(-1)),)


def test_word_invert_examples():
    assert word_invert((2,)) == WordCombination({(F(1, 2),): 1, (0,): -1})
    assert word_invert((0,)) == WordCombination({(0,): -1})
    assert word_invert((2, 0)) == WordCombination({(F(1, 2), 0): -1, (0, 0): 1})


@given(words)
def test_word_invert_involution(w):
    once = word_invert(w)
    twice = WordCombination()
    for u, c in once:
        twice = twice + word_invert(u) * c
    assert twice == WordCombination.of(w)


def test_shuffle_examples():
    a, b = F(3), F(5)
    assert shuffle((a,), (b,)) == WordCombination({(a, b): 1, (b, a): 1})
    assert shuffle((), (1, 0)) == WordCombination.of((1, 0))
    s = shuffle((1,), (1, 0))
    assert s == WordCombination({(1, 1, 0): 2, (1, 0, 1): 1})
    assert sum(c for _, c in s) == 3


@given(words, words)
def test_shuffle_matches_brute_force(u, v):
    assert shuffle(u, v) == brute_shuffle(u, v)


@given(words, words, words)
def test_shuffle_commutative_associative(u, v, w):
    assert shuffle(u, v) == shuffle(v, u)
    left = shuffle(u, v).shuffle(WordCombination.of(w))
    right = WordCombination.of(u).shuffle(shuffle(v, w))
    assert left == right


def test_regularize_examples():
    assert shuffle_regularize((1, 0)) == {(0, 0): WordCombination.of((1, 0))}
    assert shuffle_regularize((1,)) == {(0, 1): WordCombination.of(())}
    reg = shuffle_regularize((1, 1))
    assert reg == {(0, 2): WordCombination.of(())}
    assert t_polynomial(reg) == {2: WordCombination.of(()) * F(1, 2)}
    assert not regularized_part((1, 1))


def test_regularize_leading_zero():
    reg = shuffle_regularize((0, 1, 0))
    assert all(is_convergent_word(u) for combo in reg.values() for u, _ in combo)
    assert expand_regularized(reg) == WordCombination.of((0, 1, 0))


@given(binary)
def test_regularize_round_trip(w):
    reg = shuffle_regularize(w)
    for combo in reg.values():
        for u, _ in combo:
            assert u == () or (u[0] == 1 and u[-1] == 0)
    assert expand_regularized(reg) == WordCombination.of(w)


def test_regularize_words_of_length_three():
    for w in set(permutations((F(0), F(1), F(1)))):
        assert expand_regularized(shuffle_regularize(w)) == WordCombination.of(w)
