from __future__ import annotations

from braidorder.garside import normal_form
from braidorder.words import BraidWord, parse_word


def w(text: str, n: int = 3) -> BraidWord:
    return parse_word(text, n)


def nf(text: str, n: int = 3):
    return normal_form(parse_word(text, n))
