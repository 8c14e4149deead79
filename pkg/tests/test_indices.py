from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from mpldual.indices import (EmptyIndexError, NotAdmissibleError, VarIndex, compositions, dagger, depth,
                             format_index, indices_up_to, is_admissible, parse_index, reverse_index,
                             star_expansion, vee, weight)
from mpldual.words import index_to_word, word_dual

indices = st.lists(st.integers(1, 4), min_size=1, max_size=5).map(tuple)
admissible = indices.map(lambda k: k[:-1] + (k[-1] + 1,))


@pytest.mark.parametrize("k, w", [((1, 2), 3), ((), 0), ((3, 1, 1), 5)])
def test_weight(k, w):
    assert weight(k) == w


@pytest.mark.parametrize("k, ok", [((1, 2), True), ((2, 1), False), ((), True)])
def test_is_admissible(k, ok):
    assert is_admissible(k) is ok


@pytest.mark.parametrize("k, d", [((1, 2), (3,)), ((2, 2), (2, 2)), ((), ())])
def test_dagger_examples(k, d):
    assert dagger(k) == d


def test_dagger_rejects_non_admissible():
    with pytest.raises(NotAdmissibleError):
        dagger((2, 1))


@pytest.mark.parametrize("k, v", [((2,), (1, 1)), ((2, 1), (1, 2)), ((1,), (1,))])
def test_vee_examples(k, v):
    assert vee(k) == v


def test_vee_rejects_empty():
    with pytest.raises(EmptyIndexError):
        vee(())


def test_star_expansion_examples():
    v = VarIndex.of(["z1"], (3,))
    assert star_expansion(v) == [v]
    two = star_expansion(VarIndex.of(["z1", "z2"], (2, 5)))
    assert sorted(two) == sorted([VarIndex.of(["z1"], (7,)), VarIndex.of(["z1", "z2"], (2, 5))])
    three = star_expansion(VarIndex.of(["z1", "z2", "z3"], (1, 1, 1)))
    assert sorted(three) == sorted([VarIndex.of(["z1"], (3,)), VarIndex.of(["z1", "z2"], (1, 2)),
                                    VarIndex.of(["z1", "z3"], (2, 1)), VarIndex.of(["z1", "z2", "z3"], (1, 1, 1))])


def test_parse_and_format_round_trip():
    assert parse_index("1,2") == (1, 2)
    assert parse_index("-") == ()
    assert format_index(()) == "-"
    assert format_index(parse_index("3,1,2")) == "3,1,2"
    assert reverse_index((1, 2, 3)) == (3, 2, 1)
    with pytest.raises(ValueError):
        parse_index("0,1")


def test_compositions_count():
    for n in range(1, 9):
        assert len(list(compositions(n))) == 2 ** (n - 1)


@pytest.mark.parametrize("w", range(0, 11))
def test_dagger_involution_exhaustive(w):
    for k in compositions(w):
        if not is_admissible(k):
            continue
        d = dagger(k)
        assert dagger(d) == k
        assert weight(d) == weight(k)
        if k:
            assert depth(d) == weight(k) - depth(k)
        ones = [1] * len(k)
        assert index_to_word(VarIndex.of([1] * len(d), d)) == word_dual(index_to_word(VarIndex.of(ones, k)))


@pytest.mark.parametrize("w", range(1, 11))
def test_vee_involution_exhaustive(w):
    for k in compositions(w):
        v = vee(k)
        assert vee(v) == k
        assert weight(v) == weight(k)


@given(admissible)
def test_dagger_property(k):
    assert dagger(dagger(k)) == k
    assert is_admissible(dagger(k))


@given(st.lists(st.integers(1, 3), min_size=1, max_size=6).map(tuple))
def test_star_expansion_property(k):
    v = VarIndex.of([f"z{i}" for i in range(len(k))], k)
    terms = star_expansion(v)
    assert len(terms) == 2 ** (len(k) - 1)
    assert all(t.weight == weight(k) for t in terms)
    assert all(t.args[0] == "z0" for t in terms)


def test_indices_up_to_counts():
    assert len(indices_up_to(4)) == 1 + 2 + 4 + 8
    assert all(len(k) <= 2 for k in indices_up_to(6, 2))
