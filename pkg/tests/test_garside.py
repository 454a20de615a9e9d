from __future__ import annotations

import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from braidorder.garside import (
    NormalForm,
    degree_bound_test,
    delta_power_word,
    delta_word,
    factor_at,
    is_normal_pair,
    left_divides,
    left_gcd,
    left_gcd_nf,
    normal_form,
    right_divide_generator,
    right_divides_generator,
    right_lcm,
    right_lcm_nf,
)
from braidorder.lattice import divisors
from braidorder.words import BraidWord, SimpleBraid, render, simple_from_word
from helpers import nf, w
import oracles


def positive_words(n: int, max_len: int = 14):
    return st.lists(st.integers(1, n - 1), max_size=max_len).map(lambda xs: BraidWord(tuple(xs), n))


@pytest.mark.parametrize("n, expected", [(1, ""), (2, "a"), (3, "aba"), (4, "abcaba")])
def test_delta_word(n, expected):
    word = delta_word(n)
    assert render(word) == expected
    assert len(word) == n * (n - 1) // 2


def test_normal_pair_examples():
    d3, b, a = SimpleBraid.delta(3), simple_from_word(w("b")), simple_from_word(w("a"))
    for s in (d3, a, b, SimpleBraid.identity(3)):
        assert is_normal_pair(s, SimpleBraid.identity(3))
    assert is_normal_pair(d3, b)
    assert not is_normal_pair(a, b)
    with pytest.raises(ValueError):
        is_normal_pair(a, SimpleBraid.identity(4))


@pytest.mark.parametrize(
    "text, rendered",
    [("abab", "aba·b"), ("", "1"), ("abaaba", "aba·aba"), ("bab", "aba"), ("aabb", "a·ab·b")],
)
def test_normal_form_examples(text, rendered):
    assert nf(text).render() == rendered


def test_normal_form_of_empty_word():
    x = nf("")
    assert x.degree == 0 and x.is_identity and x.factors == ()


@pytest.mark.parametrize("n, max_len", [(3, 7), (4, 5)])
def test_normal_form_uniqueness_against_relation_closure(n, max_len):
    """Two positive words have the same normal form iff the braid relations connect them."""
    by_class: dict = {}
    for letters in oracles.positive_words(n, max_len):
        by_class.setdefault(oracles.canonical(letters), set()).add(normal_form(BraidWord(letters, n)))
    for forms in by_class.values():
        assert len(forms) == 1
    all_forms = [next(iter(f)) for f in by_class.values()]
    assert len(set(all_forms)) == len(all_forms)


@given(positive_words(4))
def test_normal_form_is_normal_and_stable(word):
    x = normal_form(word)
    for s, t in zip(x.factors, x.factors[1:]):
        assert is_normal_pair(s, t)
    assert all(not f.is_identity for f in x.factors)
    assert normal_form(x.word()) == x
    assert x.degree <= len(word)
    assert x.length == len(word)


@given(positive_words(4, 8), positive_words(4, 8), positive_words(4, 8))
def test_multiplication_is_associative(u, v, t):
    a, b, c = normal_form(u), normal_form(v), normal_form(t)
    assert (a * b) * c == a * (b * c) == normal_form(u + v + t)


def test_factor_at():
    x = nf("abab")
    assert str(factor_at(x, 2)) == "b"
    assert factor_at(x, 5).is_identity
    assert factor_at(normal_form(delta_power_word(3, 2)), 1) == SimpleBraid.delta(3)
    with pytest.raises(ValueError):
        factor_at(x, 0)


def test_degree_bound_test():
    assert degree_bound_test(w("abab"), 3, 2)
    assert not degree_bound_test(w("abab"), 3, 1)
    assert degree_bound_test(w(""), 3, 0)


@pytest.mark.parametrize("d", [0, 1, 2, 3])
def test_degree_bound_matches_divisibility(d):
    target = delta_power_word(3, d)
    for letters in oracles.positive_words(3, 3 * d + 1):
        x = BraidWord(letters, 3)
        assert degree_bound_test(x, 3, d) == left_divides(x, target)


@pytest.mark.parametrize("n, count", [(1, 1), (2, 2), (3, 6), (4, 24)])
def test_number_of_simple_braids(n, count):
    assert len(divisors(delta_word(n))) == count


def test_divisibility_examples():
    assert left_divides(w("ab"), delta_word(3))
    assert not left_divides(w("a"), w("b"))
    for y in ("", "a", "abba", "bab"):
        assert left_divides(w(""), w(y))


def test_gcd_lcm_examples():
    assert render(left_gcd(w("a"), w("b"))) == ""
    assert render(left_gcd(w("abab"), w("abab"))) == "abab"
    assert render(left_gcd(w("ab"), w("aba"))) == "ab"
    assert render(right_lcm(w("a"), w("b"))) == "aba"
    assert render(right_lcm(w("abb"), w(""))) == "abb"
    assert render(right_lcm(w("a", 4), w("c", 4))) == "ac"


def _canon(x: NormalForm):
    return oracles.canonical(x.word().letters)


def test_gcd_lcm_exhaustive_on_div_delta3_squared(div_delta3_sq):
    elems = div_delta3_sq
    words = {x: x.word().letters for x in elems}
    divides = {(x, y): oracles.left_divides(words[x], words[y]) for x in elems for y in elems}
    for x, y in itertools.product(elems, repeat=2):
        assert left_divides(x, y) == divides[(x, y)]
        common = [z for z in elems if divides[(z, x)] and divides[(z, y)]]
        g = left_gcd_nf(x, y)
        assert g in common
        assert all(divides[(z, g)] for z in common)
        upper = [z for z in elems if divides[(x, z)] and divides[(y, z)]]
        m = right_lcm_nf(x, y)
        assert m in upper
        assert all(divides[(m, z)] for z in upper)


def test_lattice_laws_on_div_delta3_squared(div_delta3_sq):
    elems = div_delta3_sq
    g, m = left_gcd_nf, right_lcm_nf
    for x, y in itertools.product(elems, repeat=2):
        assert g(x, y) == g(y, x) and m(x, y) == m(y, x)
        assert g(x, x) == x and m(x, x) == x
        assert g(x, m(x, y)) == x and m(x, g(x, y)) == x
    for x, y, z in itertools.product(elems[::3], repeat=3):
        assert g(g(x, y), z) == g(x, g(y, z))
        assert m(m(x, y), z) == m(x, m(y, z))


def test_right_division_by_generators():
    x = nf("abab")
    assert right_divides_generator(x, 1) and right_divides_generator(x, 2)
    assert render(right_divide_generator(x, 2).word()) == "aba"
    assert not right_divides_generator(nf("ab"), 1)


def test_left_division_errors():
    with pytest.raises(ValueError):
        nf("b").left_divide_generator(1)
    with pytest.raises(ValueError):
        normal_form(w("A"))
