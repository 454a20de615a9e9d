"""Left-greedy normal form and divisibility in the positive braid monoid."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .words import BraidWord, SimpleBraid, render

__all__ = [
    "NormalForm",
    "delta_word",
    "delta_power_word",
    "is_normal_pair",
    "normal_form",
    "left_gcd",
    "right_lcm",
    "left_divides",
    "right_divides_generator",
    "factor_at",
    "degree_bound_test",
    "reverse_word",
]

Perm = tuple[int, ...]


# --- raw permutation helpers -------------------------------------------------
# Factors are handled as bare permutation tuples here; SimpleBraid objects are
# only built at the API boundary.


def _right_desc(p: Perm, i: int) -> bool:
    return p[i - 1] > p[i]


def _left_desc(p: Perm, i: int) -> bool:
    return p.index(i + 1) < p.index(i)


def _times_gen(p: Perm, i: int) -> Perm:
    q = list(p)
    q[i - 1], q[i] = q[i], q[i - 1]
    return tuple(q)


def _gen_inv_times(p: Perm, i: int) -> Perm:
    """sigma_i^{-1} * p, assuming sigma_i left-divides p."""
    return tuple(i + 1 if v == i else i if v == i + 1 else v for v in p)


def _is_identity(p: Perm) -> bool:
    return all(v == k + 1 for k, v in enumerate(p))


def _normalize_pair(s: Perm, t: Perm) -> tuple[Perm, Perm]:
    n = len(s)
    moved = True
    while moved:
        moved = False
        for i in range(1, n):
            if _left_desc(t, i) and not _right_desc(s, i):
                s = _times_gen(s, i)
                t = _gen_inv_times(t, i)
                moved = True
    return s, t


def _normalize(factors: list[Perm]) -> list[Perm]:
    """Make every adjacent pair normal; strip trailing identities."""
    changed = True
    while changed:
        changed = False
        for j in range(len(factors) - 2, -1, -1):
            s, t = factors[j], factors[j + 1]
            s2, t2 = _normalize_pair(s, t)
            if s2 != s:
                factors[j], factors[j + 1] = s2, t2
                changed = True
    while factors and _is_identity(factors[-1]):
        factors.pop()
    return factors


def _append_generator(factors: list[Perm], i: int, n: int) -> list[Perm]:
    ident = tuple(range(1, n + 1))
    factors.append(_times_gen(ident, i))
    return _normalize(factors)


# --- public API --------------------------------------------------------------


@dataclass(frozen=True)
class NormalForm:
    """Normal form of a positive n-braid: a tuple of simple factors.

    Equality of normal forms is equality of braids.  Factors are stored as
    permutation tuples; trailing identity factors are never stored.
    """

    n: int
    perms: tuple[Perm, ...]

    @classmethod
    def identity(cls, n: int) -> NormalForm:
        return cls(n, ())

    @property
    def degree(self) -> int:
        return len(self.perms)

    @property
    def factors(self) -> tuple[SimpleBraid, ...]:
        return tuple(SimpleBraid(p) for p in self.perms)

    @property
    def length(self) -> int:
        return sum(SimpleBraid(p).length for p in self.perms)

    @property
    def is_identity(self) -> bool:
        return not self.perms

    def word(self) -> BraidWord:
        letters: list[int] = []
        for p in self.perms:
            letters.extend(_simple_word(p))
        return BraidWord(tuple(letters), self.n)

    def render(self) -> str:
        if not self.perms:
            return "1"
        return "·".join(render(_simple_word(p)) for p in self.perms)

    __str__ = render

    def times_generator(self, i: int) -> NormalForm:
        return NormalForm(self.n, tuple(_append_generator(list(self.perms), i, self.n)))

    def __mul__(self, other: NormalForm) -> NormalForm:
        n = max(self.n, other.n)
        a, b = self.with_strands(n), other.with_strands(n)
        return NormalForm(n, tuple(_normalize(list(a.perms) + list(b.perms))))

    def with_strands(self, n: int) -> NormalForm:
        if n == self.n:
            return self
        if n < self.n:
            raise ValueError("cannot shrink the strand count")
        ext = tuple(range(self.n + 1, n + 1))
        return NormalForm(n, tuple(p + ext for p in self.perms))

    def head_divisible_by(self, i: int) -> bool:
        """Whether sigma_i left-divides the braid."""
        return bool(self.perms) and _left_desc(self.perms[0], i)

    def left_divide_generator(self, i: int) -> NormalForm:
        """sigma_i^{-1} x; raises ValueError when sigma_i does not left-divide x."""
        if not self.head_divisible_by(i):
            raise ValueError(f"sigma_{i} does not left-divide {self}")
        factors = list(self.perms)
        factors[0] = _gen_inv_times(factors[0], i)
        return NormalForm(self.n, tuple(_normalize(factors)))

    def left_divide_simple(self, s: Perm) -> NormalForm:
        out = self
        for i in _simple_word(s):
            out = out.left_divide_generator(i)
        return out


@lru_cache(maxsize=None)
def _simple_word(p: Perm) -> tuple[int, ...]:
    return SimpleBraid(p).word().letters


def delta_word(n: int) -> BraidWord:
    """Delta_1 = 1 and Delta_n = sigma_1 sigma_2 ... sigma_{n-1} Delta_{n-1}."""
    if n < 1:
        raise ValueError("n must be >= 1")
    letters: list[int] = []
    for m in range(n, 1, -1):
        letters.extend(range(1, m))
    return BraidWord(tuple(letters), n)


def delta_power_word(n: int, d: int) -> BraidWord:
    return BraidWord(delta_word(n).letters * d, n)


def is_normal_pair(s: SimpleBraid, t: SimpleBraid) -> bool:
    """Each sigma_i left-dividing t must right-divide s."""
    if s.n != t.n:
        raise ValueError("simple braids with different strand counts")
    return t.left_descents <= s.right_descents


def normal_form(w: BraidWord) -> NormalForm:
    """Left-greedy normal form of a positive word.

    >>> from braidorder.words import parse_word
    >>> normal_form(parse_word("abab", 3)).render()
    'aba·b'
    """
    if not w.is_positive:
        raise ValueError("normal_form expects a positive word")
    return _normal_form_letters(w.letters, w.n)


@lru_cache(maxsize=200_000)
def _normal_form_letters(letters: tuple[int, ...], n: int) -> NormalForm:
    factors: list[Perm] = []
    for i in letters:
        factors = _append_generator(factors, i, n)
    return NormalForm(n, tuple(factors))


def _as_nf(x: BraidWord | NormalForm, n: int | None = None) -> NormalForm:
    nf = x if isinstance(x, NormalForm) else normal_form(x)
    return nf if n is None else nf.with_strands(n)


def _common_n(*xs: BraidWord | NormalForm) -> int:
    return max(x.n for x in xs)


def _simple_gcd(s: Perm, t: Perm) -> Perm:
    n = len(s)
    g = tuple(range(1, n + 1))
    found = True
    while found:
        found = False
        for i in range(1, n):
            if _left_desc(s, i) and _left_desc(t, i):
                g = _times_gen(g, i)
                s, t = _gen_inv_times(s, i), _gen_inv_times(t, i)
                found = True
                break
    return g


def left_gcd_nf(x: NormalForm, y: NormalForm) -> NormalForm:
    n = max(x.n, y.n)
    x, y = x.with_strands(n), y.with_strands(n)
    heads: list[Perm] = []
    while x.perms and y.perms:
        m = _simple_gcd(x.perms[0], y.perms[0])
        if _is_identity(m):
            break
        heads.append(m)
        x, y = x.left_divide_simple(m), y.left_divide_simple(m)
    return NormalForm(n, tuple(_normalize(heads)))


def left_gcd(x: BraidWord | NormalForm, y: BraidWord | NormalForm) -> BraidWord:
    """Greatest common left divisor, as a positive word."""
    return left_gcd_nf(_as_nf(x), _as_nf(y)).word()


def _reverse_right(letters: Sequence[int]) -> list[int]:
    """Right reversing: rewrite s_i^-1 s_j until the word is positive.negative."""
    w = list(letters)
    while True:
        for k in range(len(w) - 1):
            if w[k] < 0 < w[k + 1]:
                break
        else:
            return w
        i, j = -w[k], w[k + 1]
        if i == j:
            repl: list[int] = []
        elif abs(i - j) >= 2:
            repl = [j, -i]
        else:
            repl = [j, i, -j, -i]
        w[k : k + 2] = repl


def right_lcm_nf(x: NormalForm, y: NormalForm) -> NormalForm:
    n = max(x.n, y.n)
    x, y = x.with_strands(n), y.with_strands(n)
    ux = [-a for a in reversed(x.word().letters)] + list(y.word().letters)
    reversed_word = _reverse_right(ux)
    positive = [a for a in reversed_word if a > 0]
    out = x
    for i in positive:
        out = out.times_generator(i)
    return out


def right_lcm(x: BraidWord | NormalForm, y: BraidWord | NormalForm) -> BraidWord:
    """Least common right multiple, as a positive word."""
    return right_lcm_nf(_as_nf(x), _as_nf(y)).word()


def left_divides(x: BraidWord | NormalForm, y: BraidWord | NormalForm) -> bool:
    """Whether y = x z for some positive z."""
    n = _common_n(x, y)
    xn, yn = _as_nf(x, n), _as_nf(y, n)
    for i in xn.word().letters:
        if not yn.head_divisible_by(i):
            return False
        yn = yn.left_divide_generator(i)
    return True


def reverse_word(w: BraidWord) -> BraidWord:
    return BraidWord(tuple(reversed(w.letters)), w.n)


def right_divides_generator(x: NormalForm, i: int) -> bool:
    """Whether x = y sigma_i for some positive y (via the reversal anti-automorphism)."""
    return normal_form(reverse_word(x.word())).head_divisible_by(i)


def right_divide_generator(x: NormalForm, i: int) -> NormalForm:
    rev = normal_form(reverse_word(x.word())).left_divide_generator(i)
    return normal_form(reverse_word(rev.word()))


def factor_at(x: NormalForm, d: int) -> SimpleBraid:
    """The d-th normal factor (1-based); identity beyond the degree."""
    if d < 1:
        raise ValueError("factor index starts at 1")
    if d > x.degree:
        return SimpleBraid.identity(x.n)
    return SimpleBraid(x.perms[d - 1])


def degree_bound_test(x: BraidWord | NormalForm, n: int, d: int) -> bool:
    """x divides Delta_n^d iff its degree is at most d."""
    return _as_nf(x, max(n, x.n)).degree <= d
