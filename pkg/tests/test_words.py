from __future__ import annotations

import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from braidorder.words import (
    BraidWord,
    Letter,
    SimpleBraid,
    WordParseError,
    all_simple_braids,
    flip,
    generator_divides_simple,
    inverse,
    parse_word,
    permutation_of,
    render,
    simple_from_word,
)
from helpers import w
from oracles import generator_left_divides, generator_right_divides, relation_class


def signed_words(n: int, max_len: int = 12):
    letters = st.sampled_from([i for i in range(1, n)] + [-i for i in range(1, n)])
    return st.lists(letters, max_size=max_len).map(lambda xs: BraidWord(tuple(xs), n))


@pytest.mark.parametrize(
    "text, n, letters",
    [
        ("aba", 3, (1, 2, 1)),
        ("", 3, ()),
        ("bA", 3, (2, -1)),
        ("s26S26", 27, (26, -26)),
        (" a b  C ", 4, (1, 2, -3)),
    ],
)
def test_parse(text, n, letters):
    assert parse_word(text, n).letters == letters


@pytest.mark.parametrize("text, n", [("c", 3), ("a1", 3), ("s0", 5), ("z", 30), ("S3", 3), ("a-b", 3)])
def test_parse_rejects(text, n):
    with pytest.raises(WordParseError):
        parse_word(text, n)


@given(signed_words(30, 20))
def test_parse_render_round_trip(word):
    assert parse_word(render(word), word.n) == word


def test_letter_and_word_validation():
    assert int(Letter(2, -1)) == -2
    with pytest.raises(ValueError):
        Letter(0)
    with pytest.raises(ValueError):
        BraidWord((3,), 3)
    assert BraidWord.from_letters([Letter(1), 2], 3).letters == (1, 2)
    assert [int(x) for x in w("aB").as_letters()] == [1, -2]


@pytest.mark.parametrize(
    "text, n, expected",
    [("ba", 3, "ab"), ("a", 2, "a"), ("cbaabc", 4, "abccba"), ("aB", 3, "bA")],
)
def test_flip(text, n, expected):
    assert render(flip(w(text, n), n)) == expected


@given(signed_words(5))
def test_flip_is_length_preserving_involution(word):
    once = flip(word)
    assert len(once) == len(word)
    assert flip(once) == word


@given(signed_words(4))
def test_inverse_is_involution(word):
    assert inverse(inverse(word)) == word


def test_permutation_examples():
    assert permutation_of(w("")) == (1, 2, 3)
    assert permutation_of(w("aba")) == (3, 2, 1)
    # abab, aaba and babb are the words of one braid; baba is a different braid
    assert permutation_of(w("abab")) == permutation_of(w("aaba")) == permutation_of(w("babb"))
    assert permutation_of(w("abab")) != permutation_of(w("baba"))
    with pytest.raises(ValueError):
        permutation_of(w("A"))


@pytest.mark.parametrize("n, max_len", [(3, 6), (4, 6)])
def test_permutation_invariant_under_relations(n, max_len):
    for length in range(max_len + 1):
        for letters in itertools.product(range(1, n), repeat=length):
            perms = {permutation_of(BraidWord(u, n)) for u in relation_class(letters)}
            assert len(perms) == 1


@pytest.mark.parametrize("n", [2, 3, 4])
def test_generator_divisibility_matches_exhaustive_factorization(n):
    for s in all_simple_braids(n):
        word = s.word().letters
        assert len(word) == s.length
        for i in range(1, n):
            assert generator_divides_simple("left", i, s) == generator_left_divides(i, word)
            assert generator_divides_simple("right", i, s) == generator_right_divides(i, word)


def test_generator_divisibility_examples():
    d3 = SimpleBraid.delta(3)
    assert generator_divides_simple("left", 2, d3)
    ab = simple_from_word(w("ab"))
    assert generator_divides_simple("right", 2, ab)
    assert not generator_divides_simple("right", 1, ab)
    assert not generator_divides_simple("left", 1, simple_from_word(w("b")))
    with pytest.raises(ValueError):
        generator_divides_simple("left", 3, d3)
    with pytest.raises(ValueError):
        generator_divides_simple("up", 1, d3)


def test_simple_braids():
    assert len(all_simple_braids(4)) == 24
    assert [str(s) for s in all_simple_braids(3)] == ["1", "b", "a", "ab", "ba", "aba"]
    assert str(SimpleBraid.delta(4)) == "abacba"
    assert SimpleBraid.delta(4, 2).perm == (2, 1, 3, 4)
    assert SimpleBraid.identity(3).is_identity
    with pytest.raises(ValueError):
        simple_from_word(w("aa"))
    with pytest.raises(ValueError):
        SimpleBraid((1, 1, 2))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_simple_word_round_trip(n):
    for s in all_simple_braids(n):
        assert simple_from_word(s.word()) == s
