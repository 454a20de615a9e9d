from __future__ import annotations

import itertools
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from braidorder.garside import delta_word, left_divides, normal_form
from braidorder.order import (
    OrderResult,
    Polarity,
    ReductionCapError,
    compare,
    handle_reduce,
    is_sigma_positive,
    jump_height,
    main_generator_index,
    reduce_to_sigma_consistent,
)
from braidorder.words import BraidWord, inverse, render
from helpers import w


def signed_words(n: int, max_len: int = 14):
    letters = st.sampled_from([i for i in range(1, n)] + [-i for i in range(1, n)])
    return st.lists(letters, max_size=max_len).map(lambda xs: BraidWord(tuple(xs), n))


def test_reduce_examples():
    res = reduce_to_sigma_consistent(w("ABab"))
    assert res.polarity is Polarity.POSITIVE and res.main_index == 2
    assert render(res.word) == "bA"
    assert reduce_to_sigma_consistent(w("aA")).polarity is Polarity.TRIVIAL
    res = reduce_to_sigma_consistent(w("Ab"))
    assert (res.polarity, res.main_index) == (Polarity.POSITIVE, 2)
    assert reduce_to_sigma_consistent(w("")).main_index is None


@pytest.mark.parametrize(
    "x, y, expected",
    [("ba", "ab", OrderResult.LESS), ("a", "b", OrderResult.LESS), ("aba", "bab", OrderResult.EQUAL),
     ("ab", "ba", OrderResult.GREATER), ("", "A", OrderResult.GREATER)],
)
def test_compare_examples(x, y, expected):
    assert compare(w(x), w(y), 3) is expected
    assert str(expected) == expected.value


def test_main_generator_examples():
    assert main_generator_index(w("bA")) == 2
    assert main_generator_index(w("a")) == 1
    assert main_generator_index(delta_word(3)) == 2
    with pytest.raises(ValueError):
        main_generator_index(w("abBA"))


def test_jump_height_examples():
    assert jump_height(w("ba"), w("ab")) == 2
    assert jump_height(w(""), w("a")) == 1
    assert jump_height(w("a"), w("b")) == 2
    with pytest.raises(ValueError):
        jump_height(w("b"), w("a"))


@given(signed_words(4))
def test_reduced_word_is_equivalent_and_consistent(word):
    res = reduce_to_sigma_consistent(word)
    # equivalence: word * reduced^{-1} reduces to the empty word
    assert handle_reduce(word.letters + inverse(res.word).letters, 4) == []
    if res.polarity is Polarity.TRIVIAL:
        assert res.word.letters == ()
    else:
        m = res.main_index
        signs = {x > 0 for x in res.word.letters if abs(x) == m}
        assert signs == {res.polarity is Polarity.POSITIVE}
        assert m == res.word.max_index


@given(signed_words(4))
def test_inverse_flips_polarity(word):
    p = reduce_to_sigma_consistent(word).polarity
    q = reduce_to_sigma_consistent(inverse(word)).polarity
    swap = {Polarity.POSITIVE: Polarity.NEGATIVE, Polarity.NEGATIVE: Polarity.POSITIVE, Polarity.TRIVIAL: Polarity.TRIVIAL}
    assert q is swap[p]


@given(st.lists(st.integers(1, 3), min_size=1, max_size=12))
def test_nonempty_positive_words_are_sigma_positive(letters):
    word = BraidWord(tuple(letters), 4)
    assert reduce_to_sigma_consistent(word).polarity is Polarity.POSITIVE
    assert is_sigma_positive(word)


def test_syntactic_positivity():
    assert is_sigma_positive(w("Ab"))
    assert not is_sigma_positive(w("aB"))
    assert not is_sigma_positive(w(""))


def test_trichotomy_and_equality_on_div_delta3_squared(div_delta3_sq):
    for x, y in itertools.product(div_delta3_sq, repeat=2):
        r = compare(x.word(), y.word(), 3)
        s = compare(y.word(), x.word(), 3)
        assert (r is OrderResult.EQUAL) == (x == y)
        assert {r, s} in ({OrderResult.EQUAL}, {OrderResult.LESS, OrderResult.GREATER})


def test_left_invariance_on_div_delta3_squared(div_delta3_sq):
    rng = random.Random(7)
    pairs = list(itertools.product(div_delta3_sq, repeat=2))
    for _ in range(5):
        z = BraidWord(tuple(rng.choice((1, 2)) for _ in range(rng.randint(1, 6))), 3)
        for x, y in pairs:
            assert compare(z + x.word(), z + y.word(), 3) is compare(x.word(), y.word(), 3)


def test_ambient_independence_on_div_delta3_squared(div_delta3_sq):
    for x, y in itertools.product(div_delta3_sq, repeat=2):
        assert compare(x.word(), y.word(), 3) is compare(x.word(), y.word(), 4)


def test_order_extends_divisibility(div_delta3_cube):
    for x, y in itertools.product(div_delta3_cube, repeat=2):
        if x != y and left_divides(x, y):
            assert compare(x.word(), y.word(), 3) is OrderResult.LESS


def test_x_less_than_sigma_x(div_delta3_sq):
    for x in div_delta3_sq:
        for i in (1, 2):
            assert compare(x.word(), BraidWord((i,), 3) + x.word(), 3) is OrderResult.LESS


def test_jump_height_composition(div_delta3_sq):
    ordered = sorted(div_delta3_sq, key=lambda x: sum(1 for y in div_delta3_sq if compare(y.word(), x.word(), 3) is OrderResult.LESS))
    for x, y, z in itertools.combinations(ordered, 3):
        whole = jump_height(x.word(), z.word(), 3)
        assert whole == max(jump_height(x.word(), y.word(), 3), jump_height(y.word(), z.word(), 3))


def test_reduction_cap():
    with pytest.raises(ReductionCapError):
        compare(w("abab"), w("babA"), 3, cap=1)


def test_compare_default_ambient():
    assert compare(w("a", 5), w("b", 5)) is OrderResult.LESS
    assert compare(normal_form(w("ab")).word(), w("ab")) is OrderResult.EQUAL
