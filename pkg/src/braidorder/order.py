"""The braid ordering, in the convention where the maximal generator index decides.

A word is sigma-positive when its generator of largest index occurs, and occurs
only positively.  Deciding sigma-positivity is done by handle reduction.  The
classical algorithm works with the smallest index, so words are flipped
(sigma_i -> sigma_{n-i}), reduced, and flipped back.
"""

from __future__ import annotations

import enum
import os
from dataclasses import dataclass
from typing import Sequence

from .errors import CapExceededError
from .words import BraidWord, flip, inverse

__all__ = [
    "ReductionCapError",
    "Polarity",
    "OrderResult",
    "SigmaConsistentWord",
    "DEFAULT_REDUCTION_CAP",
    "handle_reduce",
    "reduce_to_sigma_consistent",
    "compare",
    "main_generator_index",
    "jump_height",
    "is_sigma_positive",
]

DEFAULT_REDUCTION_CAP = int(os.environ.get("BRAIDORDER_REDUCTION_CAP", 10**7))


class ReductionCapError(CapExceededError):
    """Handle reduction did not finish within the iteration cap."""


class Polarity(enum.Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"
    TRIVIAL = "trivial"


class OrderResult(enum.Enum):
    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class SigmaConsistentWord:
    word: BraidWord
    polarity: Polarity
    main_index: int | None


def _first_handle(w: Sequence[int], n: int) -> tuple[int, int] | None:
    """Earliest-ending handle s_i^e v s_i^-e with v using only indices > i.

    Ending first guarantees that v contains no handle itself, so the handle is
    a permitted one.
    """
    last = [-1] * (n + 1)
    for j, x in enumerate(w):
        i = abs(x)
        k = max(last[1 : i + 1])
        if k >= 0 and w[k] == -x:
            return k, j
        last[i] = j
    return None


def handle_reduce(letters: Sequence[int], n: int, cap: int | None = None) -> list[int]:
    """Handle reduction in the min-index convention.

    The result contains no handle: it is empty, or its generator of minimal
    index occurs with one sign only.
    """
    cap = DEFAULT_REDUCTION_CAP if cap is None else cap
    w = list(letters)
    steps = 0
    while True:
        h = _first_handle(w, n)
        if h is None:
            return w
        steps += 1
        if steps > cap:
            raise ReductionCapError(f"handle reduction exceeded {cap} steps")
        start, end = h
        i = abs(w[start])
        e = 1 if w[start] > 0 else -1
        mid: list[int] = []
        for x in w[start + 1 : end]:
            if abs(x) == i + 1:
                mid += [-e * (i + 1), (1 if x > 0 else -1) * i, e * (i + 1)]
            else:
                mid.append(x)
        w[start : end + 1] = mid


def reduce_to_sigma_consistent(w: BraidWord, cap: int | None = None) -> SigmaConsistentWord:
    n = w.n
    reduced = handle_reduce(flip(w, n).letters, n, cap)
    out = flip(BraidWord(tuple(reduced), n), n)
    if not out.letters:
        return SigmaConsistentWord(out, Polarity.TRIVIAL, None)
    m = out.max_index
    signs = {x > 0 for x in out.letters if abs(x) == m}
    assert len(signs) == 1, "handle-free word must be sigma-consistent"
    pol = Polarity.POSITIVE if signs.pop() else Polarity.NEGATIVE
    return SigmaConsistentWord(out, pol, m)


def is_sigma_positive(w: BraidWord) -> bool:
    """Syntactic test: the largest-index generator occurs, only positively."""
    if not w.letters:
        return False
    m = w.max_index
    return all(x > 0 for x in w.letters if abs(x) == m)


def _ambient(x: BraidWord, y: BraidWord, n: int | None) -> int:
    if n is not None:
        return n
    return 1 + max(x.max_index, y.max_index)


def _quotient(x: BraidWord, y: BraidWord, n: int) -> BraidWord:
    return BraidWord(inverse(x.with_strands(max(x.n, n))).letters + y.letters, n)


def compare(x: BraidWord, y: BraidWord, n: int | None = None, cap: int | None = None) -> OrderResult:
    """Relation between [x] and [y]: x < y iff x^{-1} y is sigma-positive.

    >>> from braidorder.words import parse_word
    >>> str(compare(parse_word("ba", 3), parse_word("ab", 3)))
    'less'
    """
    n = _ambient(x, y, n)
    res = reduce_to_sigma_consistent(_quotient(x, y, n), cap)
    if res.polarity is Polarity.POSITIVE:
        return OrderResult.LESS
    if res.polarity is Polarity.NEGATIVE:
        return OrderResult.GREATER
    return OrderResult.EQUAL


def main_generator_index(w: BraidWord, n: int | None = None, cap: int | None = None) -> int:
    n = w.n if n is None else n
    res = reduce_to_sigma_consistent(w.with_strands(n), cap)
    if res.main_index is None:
        raise ValueError("the trivial braid has no main generator")
    return res.main_index


def jump_height(x: BraidWord, y: BraidWord, n: int | None = None, cap: int | None = None) -> int:
    """Largest r with x <_r y, i.e. the main generator index of x^{-1} y."""
    n = _ambient(x, y, n)
    res = reduce_to_sigma_consistent(_quotient(x, y, n), cap)
    if res.polarity is not Polarity.POSITIVE:
        raise ValueError("jump_height needs x < y")
    return res.main_index
