from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from evilrect.langs import (
    AUTOMATA,
    DEAD,
    InvalidWord,
    Lang,
    count_words,
    count_words_marked,
    evil_word_by_substrings,
    generate_words,
    is_valid_evil_word,
    is_valid_rect_word,
    map_b,
    map_b_inv,
    rect_word_by_substrings,
)

SEQUENCE = [1, 2, 6, 20, 68, 232, 792, 2704, 9232, 31520, 107616, 367424]


def test_rect_membership():
    assert is_valid_rect_word("ud1")
    assert not is_valid_rect_word("u21")
    assert is_valid_rect_word("22uud1dud11d1d1uuud1")
    assert not is_valid_rect_word("")


def test_evil_membership():
    assert is_valid_evil_word("qrs")
    assert not is_valid_evil_word("rsq")
    assert is_valid_evil_word("qqqsrsrssrqrsrqqpprs")
    assert not is_valid_evil_word("")


def test_wrong_alphabet():
    with pytest.raises(InvalidWord):
        is_valid_rect_word("qrs")
    with pytest.raises(InvalidWord):
        is_valid_evil_word("ud1")


def test_automata_are_total():
    for dfa in AUTOMATA.values():
        for q in dfa.states:
            for ch in dfa.letters:
                assert (q, ch) in dfa.delta
        assert DEAD in dfa.states


@pytest.mark.parametrize("length", range(0, 9))
def test_dfa_matches_substring_description(length):
    for letters in product("12ud", repeat=length):
        w = "".join(letters)
        assert is_valid_rect_word(w) == rect_word_by_substrings(w)
    for letters in product("pqrs", repeat=length):
        w = "".join(letters)
        assert is_valid_evil_word(w) == evil_word_by_substrings(w)


@given(st.text("12ud", min_size=9, max_size=10))
def test_rect_dfa_long_words(w):
    assert is_valid_rect_word(w) == rect_word_by_substrings(w)


@given(st.text("pqrs", min_size=9, max_size=10))
def test_evil_dfa_long_words(w):
    assert is_valid_evil_word(w) == evil_word_by_substrings(w)


def test_map_b_examples():
    assert map_b("22uud1dud11d1d1uuud1") == "qqqsrsrssrqrsrqqpprs"
    assert map_b("1") == "s"
    assert map_b("111") == "sss"


def test_map_b_inv_examples():
    assert map_b_inv("qrs") == "ud1"
    assert map_b_inv("pqrs") == "u2d1"
    assert map_b_inv("prsrs") == "1d2d1"


def test_map_b_rejects_invalid():
    with pytest.raises(InvalidWord):
        map_b("21")
    with pytest.raises(InvalidWord):
        map_b_inv("sp")


@pytest.mark.parametrize("n", range(1, 10))
def test_map_b_is_graded_bijection(n):
    rect_words = list(generate_words(Lang.RECT, n))
    images = [map_b(w) for w in rect_words]
    assert set(images) == set(generate_words(Lang.EVIL, n))
    assert len(set(images)) == len(images)
    for w, b in zip(rect_words, images):
        assert len(b) == n
        assert b.count("r") == w.count("d")
        assert map_b_inv(b) == w


def test_generate_examples():
    assert list(generate_words(Lang.RECT, 1)) == ["1"]
    assert set(generate_words(Lang.RECT, 3)) == {"111", "1d1", "d11", "ud1", "2d1", "dd1"}
    assert set(generate_words(Lang.EVIL, 2)) == {"ss", "rs"}
    assert list(generate_words(Lang.RECT, 0)) == []


@pytest.mark.parametrize("lang", list(Lang))
def test_generate_is_sorted_unique_and_valid(lang):
    order = {ch: i for i, ch in enumerate(AUTOMATA[lang].letters)}
    for n in range(1, 8):
        words = list(generate_words(lang, n))
        keys = [[order[ch] for ch in w] for w in words]
        assert keys == sorted(keys)
        assert len(set(words)) == len(words) == count_words(lang, n)
        assert all(AUTOMATA[lang].accepts(w) for w in words)


def test_count_examples():
    assert count_words(Lang.RECT, 3) == 6
    assert count_words_marked(Lang.EVIL, 3, 1) == 4
    assert count_words(Lang.EVIL, 0) == 0


@pytest.mark.parametrize("n", range(1, 13))
def test_three_languages_equinumerous(n):
    assert count_words(Lang.RECT, n) == count_words(Lang.EVIL, n) == count_words(Lang.AI, n) == SEQUENCE[n - 1]


@pytest.mark.parametrize("n", range(1, 8))
def test_marked_counts_match_generation(n):
    for lang in Lang:
        mark = AUTOMATA[lang].marked
        words = list(generate_words(lang, n))
        for k in range(n + 1):
            assert count_words_marked(lang, n, k) == sum(1 for w in words if w.count(mark) == k)
