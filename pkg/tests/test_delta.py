from math import comb

import pytest
from hypothesis import given, strategies as st

from corrkit.errors import MalformedWordError
from corrkit.simplicial.delta import (
    DegeneracyWord,
    OperatorWord,
    compose,
    monotone_maps,
    normalize_word,
    surjections,
)


def word(text, n):
    return OperatorWord.parse(text, n)


def test_face_after_degeneracy_is_identity():
    assert normalize_word(word("d1 s1", 1)).symbols == ()
    assert normalize_word(word("d0 s0", 0)).symbols == ()


def test_normal_form_puts_degeneracies_first():
    assert normalize_word(word("d0 s1", 1)).symbols == (("s", 0), ("d", 0))


def test_faces_normalize_increasing():
    assert normalize_word(word("d2 d1", 3)).symbols == (("d", 1), ("d", 3))
    assert normalize_word(word("d1 d3", 3)) == normalize_word(word("d2 d1", 3))


def test_parse_accepts_subscripts():
    assert word("d_0 . s_1", 1) == word("d0 s1", 1)


@pytest.mark.parametrize("text, n", [("d3 d1", 3), ("s2", 1), ("d0", 0), ("x1", 2)])
def test_malformed_words(text, n):
    with pytest.raises(MalformedWordError):
        normalize_word(word(text, n))


@pytest.mark.parametrize("indices", [(1, 1), (0, 1), (-1,)])
def test_degeneracy_word_must_decrease(indices):
    with pytest.raises(MalformedWordError):
        DegeneracyWord(indices)


def test_degeneracy_word_surjection():
    assert DegeneracyWord((1,)).surjection(1) == (0, 1, 1)
    assert DegeneracyWord.from_surjection((0, 0, 1)) == DegeneracyWord((0,))


@given(st.integers(min_value=0, max_value=6), st.integers(min_value=0, max_value=6))
def test_surjection_count(p, m):
    assert len(surjections(p, m)) == (comb(p, m) if m <= p else 0)


@given(st.integers(min_value=0, max_value=3), st.integers(min_value=0, max_value=3), st.data())
def test_normalization_is_idempotent_and_preserves_the_map(n, length, data):
    symbols, current = [], n
    for _ in range(length):
        kind = data.draw(st.sampled_from("ds" if current > 0 else "s"))
        i = data.draw(st.integers(min_value=0, max_value=current))
        symbols.insert(0, (kind, i))
        current += 1 if kind == "s" else -1
    w = OperatorWord(tuple(symbols), n)
    normal = normalize_word(w)
    assert normal.as_map() == w.as_map()
    assert normalize_word(normal) == normal


def test_monotone_maps_compose():
    maps = list(monotone_maps(1, 2))
    assert len(maps) == 6
    assert compose((0, 2), (1, 1)) == (2, 2)
