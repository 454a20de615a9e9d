"""Braid words, permutations and simple braids.

A braid word is stored as a tuple of signed integers: ``+i`` stands for the
generator sigma_i and ``-i`` for its inverse.  The text syntax uses ``a``..``y``
for sigma_1..sigma_25, upper case for inverses, and ``s<i>``/``S<i>`` for any
index.

Permutations of simple braids use the "arrangement" convention: start from
``(1, 2, ..., n)`` and, reading the word left to right, let sigma_i swap the
entries in positions ``i`` and ``i + 1``.  With this convention the
permutation of ``uv`` is obtained by applying ``u`` and then ``v``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

__all__ = [
    "WordParseError",
    "Letter",
    "BraidWord",
    "SimpleBraid",
    "parse_word",
    "render",
    "flip",
    "inverse",
    "permutation_of",
    "simple_from_word",
    "generator_divides_simple",
    "all_simple_braids",
]

# "s<digits>" must be tried before the single letter s (sigma_19)
_TOKEN = re.compile(r"\s*(?:([sS])(\d+)|([a-yA-Y]))")


class WordParseError(ValueError):
    """Raised when a text does not follow the braid word grammar."""


@dataclass(frozen=True)
class Letter:
    index: int
    sign: int = 1

    def __post_init__(self) -> None:
        if self.index < 1:
            raise ValueError(f"generator index must be >= 1, got {self.index}")
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign}")

    def __int__(self) -> int:
        return self.sign * self.index


@dataclass(frozen=True)
class BraidWord:
    """A finite word in the generators of B_n.

    ``letters`` holds signed generator indices; ``n`` is the ambient number of
    strands, so every index is smaller than ``n``.
    """

    letters: tuple[int, ...]
    n: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "letters", tuple(int(x) for x in self.letters))
        if self.n < 1:
            raise ValueError(f"strand count must be >= 1, got {self.n}")
        for x in self.letters:
            if x == 0 or abs(x) >= self.n:
                raise ValueError(f"letter {x} is not a generator of B_{self.n}")

    @classmethod
    def from_letters(cls, letters: Iterable[Letter | int], n: int) -> BraidWord:
        return cls(tuple(int(x) for x in letters), n)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __add__(self, other: BraidWord) -> BraidWord:
        return BraidWord(self.letters + other.letters, max(self.n, other.n))

    def __str__(self) -> str:
        return render(self)

    def as_letters(self) -> list[Letter]:
        return [Letter(abs(x), 1 if x > 0 else -1) for x in self.letters]

    @property
    def is_positive(self) -> bool:
        return all(x > 0 for x in self.letters)

    @property
    def max_index(self) -> int:
        return max((abs(x) for x in self.letters), default=0)

    def with_strands(self, n: int) -> BraidWord:
        return BraidWord(self.letters, n)


def parse_word(text: str, n: int) -> BraidWord:
    """Parse ``text`` into a word of B_n.

    >>> parse_word("bA", 3).letters
    (2, -1)
    """
    letters: list[int] = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            if text[pos:].strip() == "":
                break
            raise WordParseError(f"unexpected character {text[pos]!r} at position {pos}")
        if m.group(3):
            ch = m.group(3)
            index = ord(ch.lower()) - ord("a") + 1
            sign = 1 if ch.islower() else -1
        else:
            index = int(m.group(2))
            sign = 1 if m.group(1) == "s" else -1
            if index < 1:
                raise WordParseError("generator index must be >= 1")
        if index >= n:
            raise WordParseError(f"generator sigma_{index} does not belong to B_{n}")
        letters.append(sign * index)
        pos = m.end()
    return BraidWord(tuple(letters), n)


def _render_letter(x: int) -> str:
    i = abs(x)
    if i <= 25:
        ch = chr(ord("a") + i - 1)
        return ch if x > 0 else ch.upper()
    return f"s{i}" if x > 0 else f"S{i}"


def render(w: BraidWord | Sequence[int]) -> str:
    letters = w.letters if isinstance(w, BraidWord) else w
    return "".join(_render_letter(x) for x in letters)


def flip(w: BraidWord, n: int | None = None) -> BraidWord:
    """Apply the flip automorphism sigma_i -> sigma_{n-i} letterwise."""
    n = w.n if n is None else n
    return BraidWord(tuple((n - abs(x)) * (1 if x > 0 else -1) for x in w.letters), n)


def inverse(w: BraidWord) -> BraidWord:
    return BraidWord(tuple(-x for x in reversed(w.letters)), w.n)


def _apply(perm: list[int], i: int) -> None:
    perm[i - 1], perm[i] = perm[i], perm[i - 1]


def permutation_of(w: BraidWord) -> tuple[int, ...]:
    """Image of a positive word in the symmetric group (arrangement convention)."""
    if not w.is_positive:
        raise ValueError("permutation_of expects a positive word")
    perm = list(range(1, w.n + 1))
    for i in w.letters:
        _apply(perm, i)
    return tuple(perm)


@dataclass(frozen=True)
class SimpleBraid:
    """A divisor of Delta_n, identified with its permutation."""

    perm: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.perm) != list(range(1, len(self.perm) + 1)):
            raise ValueError(f"{self.perm} is not a permutation")

    @classmethod
    def identity(cls, n: int) -> SimpleBraid:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def delta(cls, n: int, r: int | None = None) -> SimpleBraid:
        """Delta_r as a simple n-braid (default r = n)."""
        r = n if r is None else r
        return cls(tuple(range(r, 0, -1)) + tuple(range(r + 1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.perm)

    @cached_property
    def right_descents(self) -> frozenset[int]:
        p = self.perm
        return frozenset(i for i in range(1, len(p)) if p[i - 1] > p[i])

    @cached_property
    def left_descents(self) -> frozenset[int]:
        pos = {v: k for k, v in enumerate(self.perm)}
        return frozenset(i for i in range(1, len(self.perm)) if pos[i + 1] < pos[i])

    @cached_property
    def length(self) -> int:
        p = self.perm
        return sum(1 for a in range(len(p)) for b in range(a + 1, len(p)) if p[a] > p[b])

    @property
    def is_identity(self) -> bool:
        return self.length == 0

    def word(self) -> BraidWord:
        """A positive word for the braid (lexicographically smallest reduced word)."""
        p = list(self.perm)
        pos = {v: k for k, v in enumerate(p)}
        out: list[int] = []
        while True:
            for i in range(1, len(p)):
                if pos[i + 1] < pos[i]:
                    break
            else:
                break
            # peel the smallest left descent: p <- sigma_i^{-1} p
            pos[i], pos[i + 1] = pos[i + 1], pos[i]
            out.append(i)
        return BraidWord(tuple(out), self.n)

    def __str__(self) -> str:
        return render(self.word()) or "1"


def simple_from_word(w: BraidWord) -> SimpleBraid:
    """The simple braid represented by ``w``; raises if ``w`` is not simple."""
    perm = list(range(1, w.n + 1))
    for i in w.letters:
        if i < 0 or perm[i - 1] > perm[i]:
            raise ValueError(f"{render(w)} does not represent a simple braid")
        _apply(perm, i)
    return SimpleBraid(tuple(perm))


def generator_divides_simple(side: str, i: int, s: SimpleBraid) -> bool:
    """Whether sigma_i divides ``s`` on the given side ('left' or 'right')."""
    if not 1 <= i < s.n:
        raise ValueError(f"sigma_{i} is not a generator of B_{s.n}")
    if side == "left":
        return i in s.left_descents
    if side == "right":
        return i in s.right_descents
    raise ValueError(f"side must be 'left' or 'right', got {side!r}")


def all_simple_braids(n: int) -> list[SimpleBraid]:
    """All n! simple n-braids, lexicographic in one-line notation."""
    from itertools import permutations

    return [SimpleBraid(p) for p in permutations(range(1, n + 1))]
