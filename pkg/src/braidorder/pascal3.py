"""Explicit increasing enumeration of Div(Delta_3^d) built like a Pascal triangle.

S_3^d is the concatenation of the translated copies delta_{3,q} S_2^d
(q = 0..2d) with blocks S_3^{d,p} (2 <= p <= 2d-1) inserted between them.
Both S_3^{d,2k} and S_3^{d,2k+1} are left translates of the same fragment of
S_3^{d-1}:

    S_3^{d-1,2k-1} + delta_{3,2k-1} S_2^{d-1} + S_3^{d-1,2k}

by a, ba, b, ab according to p = 0, 1, 2, 3 (mod 4).  The quotient sequence is
assembled from the same block tree: a inside every delta-block, A^L b on a
step from a delta-block into an inserted block, and b A^L on the way back,
where L is the level of the enclosing construction.

Burckel codes are the block sizes of a positive 3-strand word; ShortLex on
the codes of the words stored in S_3^d realises the braid ordering of B_3^+.
"""

from __future__ import annotations

import enum
import os
from dataclasses import dataclass, field
from functools import lru_cache

from .errors import CapExceededError
from .garside import (
    NormalForm,
    degree_bound_test,
    delta_power_word,
    normal_form,
)
from .lattice import is_drawn, ordered_enumeration
from .order import OrderResult, handle_reduce, is_sigma_positive
from .words import BraidWord, render

__all__ = [
    "PascalCapError",
    "DEFAULT_MAX_DEGREE",
    "Direction",
    "DeltaWord",
    "SequenceEntry",
    "BraidSequence",
    "CheckResult",
    "PascalReport",
    "BurckelCode",
    "delta_np",
    "s_sequence",
    "w_sequence",
    "verify_pascal",
    "delta_factorization_holds",
    "delta_commutation_holds",
    "burckel_code",
    "is_burckel_normal",
    "shortlex_compare",
    "burckel_representative",
]

DEFAULT_MAX_DEGREE = int(os.environ.get("BRAIDORDER_MAX_PASCAL_DEGREE", 12))
ENUMERATION_CHECK_MAX_D = 6


class PascalCapError(CapExceededError):
    """Requested degree beyond the configured cap for the explicit construction."""


class Direction(enum.Enum):
    SUFFIX = "suffix"  # delta_{n,p}
    PREFIX = "prefix"  # tilde delta_{n,p}


@dataclass(frozen=True)
class DeltaWord:
    n: int
    p: int
    direction: Direction
    word: BraidWord


def _period(n: int) -> tuple[int, ...]:
    """sigma_{n,1} sigma_{1,n} = s_{n-1} ... s_1 s_1 ... s_{n-1}."""
    return tuple(range(n - 1, 0, -1)) + tuple(range(1, n))


def delta_np(n: int, p: int, direction: Direction | str = Direction.SUFFIX) -> DeltaWord:
    """Length-p suffix of the left-infinite power of the period, or prefix of the right-infinite one.

    >>> render(delta_np(3, 7).word)
    'aabbaab'
    """
    direction = Direction(direction)
    if n < 2:
        raise ValueError("n must be >= 2")
    if p < 0:
        raise ValueError("p must be >= 0")
    period = _period(n)
    reps = p // len(period) + 1
    stream = period * reps
    letters = stream[:p] if direction is Direction.PREFIX else stream[len(stream) - p :]
    return DeltaWord(n, p, direction, BraidWord(letters, n))


def _delta(p: int) -> tuple[int, ...]:
    return delta_np(3, p).word.letters


# --- the block tree ----------------------------------------------------------


@dataclass(frozen=True)
class SequenceEntry:
    word: BraidWord
    provenance: str


@dataclass(frozen=True)
class BraidSequence:
    """Entries as words, each with a tag naming the blocks that produced it."""

    n: int
    d: int
    entries: tuple[SequenceEntry, ...]
    quotients: tuple[BraidWord, ...] = field(repr=False)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    @property
    def words(self) -> tuple[BraidWord, ...]:
        return tuple(e.word for e in self.entries)

    def rendered(self) -> list[str]:
        return [render(e.word) or "1" for e in self.entries]


@dataclass
class _Seq:
    """Mutable builder: entries (letters, tag), quotient letters, kind of first and last block."""

    entries: list[tuple[tuple[int, ...], str]]
    quotients: list[tuple[int, ...]]
    first_kind: str
    last_kind: str

    def translated(self, prefix: tuple[int, ...], tag: str) -> _Seq:
        return _Seq(
            [(prefix + w, f"{tag}/{t}") for w, t in self.entries],
            list(self.quotients),
            self.first_kind,
            self.last_kind,
        )


def _delta_block(q: int, level: int, tag: str) -> _Seq:
    """delta_{3,q} S_2^level."""
    base = _delta(q)
    entries = [(base + (1,) * e, f"{tag}/a^{e}") for e in range(level + 1)]
    return _Seq(entries, [(1,)] * level, "delta", "delta")


def _transition(left: _Seq, right: _Seq, level: int, right_q: int) -> tuple[int, ...]:
    down, up = (-1,) * level + (2,), (2,) + (-1,) * level
    if left.last_kind == "delta" and right.first_kind == "insert":
        return down
    if left.last_kind == "insert" and right.first_kind == "delta":
        return up
    # adjacent delta-blocks only occur at the two ends: D_0 -> D_1 and D_(2L-1) -> D_(2L)
    return down if right_q == 1 else up


def _concat(parts: list[tuple[_Seq, int]], level: int) -> _Seq:
    entries: list[tuple[tuple[int, ...], str]] = []
    quotients: list[tuple[int, ...]] = []
    prev: _Seq | None = None
    for part, q_index in parts:
        if prev is not None:
            quotients.append(_transition(prev, part, level, q_index))
        entries += part.entries
        quotients += part.quotients
        prev = part
    return _Seq(entries, quotients, parts[0][0].first_kind, parts[-1][0].last_kind)


_PREFIX = {0: (1,), 1: (2, 1), 2: (2,), 3: (1, 2)}


def _has_insert(d: int, p: int) -> bool:
    return 2 <= p <= 2 * d - 1


@lru_cache(maxsize=None)
def _insert_block(d: int, p: int) -> _Seq:
    """S_3^{d,p} for 2 <= p <= 2d-1, as a translated fragment of S_3^{d-1}."""
    k = p // 2
    lower = d - 1
    parts: list[tuple[_Seq, int]] = []
    if _has_insert(lower, 2 * k - 1):
        parts.append((_insert_block(lower, 2 * k - 1).translated((), f"insert[{2 * k - 1}]"), -1))
    parts.append((_delta_block(2 * k - 1, lower, f"delta[{2 * k - 1}]"), 2 * k - 1))
    if _has_insert(lower, 2 * k):
        parts.append((_insert_block(lower, 2 * k).translated((), f"insert[{2 * k}]"), -1))
    fragment = _concat(parts, lower)
    out = fragment.translated(_PREFIX[p % 4], f"x{render(_PREFIX[p % 4])}")
    out.first_kind = out.last_kind = "insert"
    return out


@lru_cache(maxsize=None)
def _s3(d: int) -> _Seq:
    parts: list[tuple[_Seq, int]] = []
    for q in range(2 * d + 1):
        if q >= 1 and _has_insert(d, q):
            parts.append((_insert_block(d, q).translated((), f"insert[{q}]"), -1))
        parts.append((_delta_block(q, d, f"delta[{q}]"), q))
    return _concat(parts, d)


def _check_degree(d: int, cap: int | None) -> None:
    cap = DEFAULT_MAX_DEGREE if cap is None else cap
    if d < 0:
        raise ValueError("d must be >= 0")
    if d > cap:
        raise PascalCapError(f"degree {d} exceeds the cap {cap}")


def _sequence(n: int, d: int) -> _Seq:
    if n == 1:
        return _Seq([((), "one")], [], "delta", "delta")
    if n == 2:
        return _Seq([((1,) * e, f"delta[{e}]") for e in range(d + 1)], [(1,)] * d, "delta", "delta")
    if n == 3:
        return _s3(d)
    raise ValueError("only n in {1, 2, 3} is constructed explicitly")


@lru_cache(maxsize=64)
def _braid_sequence(n: int, d: int) -> BraidSequence:
    seq = _sequence(n, d)
    return BraidSequence(
        n,
        d,
        tuple(SequenceEntry(BraidWord(w, max(n, 1)), tag) for w, tag in seq.entries),
        tuple(BraidWord(q, max(n, 1)) for q in seq.quotients),
    )


def s_sequence(n: int, d: int, cap: int | None = None) -> BraidSequence:
    """S_n^d for n in {1, 2, 3}: the increasing enumeration of Div(Delta_n^d)."""
    _check_degree(d, cap)
    return _braid_sequence(n, d)


def w_sequence(n: int, d: int, cap: int | None = None) -> tuple[BraidWord, ...]:
    """Sigma-positive words for the quotients of consecutive entries of S_n^d."""
    _check_degree(d, cap)
    return _braid_sequence(n, d).quotients


# --- verification ------------------------------------------------------------


@dataclass(frozen=True)
class CheckResult:
    key: str
    description: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class PascalReport:
    d: int
    length: int
    checks: tuple[CheckResult, ...]

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def lines(self) -> list[str]:
        out = []
        for c in self.checks:
            status = "PASS" if c.passed else "FAIL"
            line = f"({c.key}) {status} {c.description}"
            if c.detail:
                line += f": {c.detail}"
            out.append(line)
        return out

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "length": self.length,
            "ok": self.ok,
            "checks": [
                {"key": c.key, "description": c.description, "passed": c.passed, "detail": c.detail}
                for c in self.checks
            ],
        }


def _equal_braids(u: tuple[int, ...], v: tuple[int, ...], n: int = 3) -> bool:
    w = tuple(-x for x in reversed(u)) + v
    return not handle_reduce(w, n)


def _expected_length(d: int) -> int:
    ell = 1
    for k in range(1, d + 1):
        ell = 2 * ell + 3 * k + 1
    return ell


def delta_factorization_holds(n: int, d: int, p: int) -> bool:
    """delta_{n,p} Delta_{n-1}^d tilde-delta_{n,q} = Delta_n^d with q = d(n-1) - p."""
    q = d * (n - 1) - p
    if not 0 <= p <= d * (n - 1):
        raise ValueError("need 0 <= p <= d(n-1)")
    lhs = (
        delta_np(n, p).word.letters
        + delta_power_word(n - 1, d).letters
        + delta_np(n, q, Direction.PREFIX).word.letters
    )
    return normal_form(BraidWord(lhs, n)) == normal_form(delta_power_word(n, d))


def delta_commutation_holds(n: int, d: int, i: int) -> bool:
    """delta_{n,d(n-1)} s_i = s_{i+e} delta_{n,d(n-1)} with e = d mod 2, for 1 <= i <= n-2."""
    if not 1 <= i <= n - 2:
        raise ValueError("need 1 <= i <= n-2")
    dl = delta_np(n, d * (n - 1)).word.letters
    e = d % 2
    lhs = normal_form(BraidWord(dl + (i,), n))
    rhs = normal_form(BraidWord((i + e,) + dl, n))
    return lhs == rhs


def _check(key: str, description: str, failures: list[str]) -> CheckResult:
    detail = "; ".join(failures[:3])
    if len(failures) > 3:
        detail += f"; ... ({len(failures)} failures)"
    return CheckResult(key, description, not failures, detail)


def verify_pascal(d: int, cap: int | None = None, enumeration_max_d: int = ENUMERATION_CHECK_MAX_D) -> PascalReport:
    """Run the structural checks (a)-(h) on S_3^d and its quotient sequence."""
    _check_degree(d, 8 if cap is None else cap)
    seq = _braid_sequence(3, d)
    words = [e.word.letters for e in seq.entries]
    quots = [q.letters for q in seq.quotients]
    z = normal_form(delta_power_word(3, d))
    checks = []

    bad = [f"#{k} {render(w)}" for k, w in enumerate(words) if not degree_bound_test(BraidWord(w, 3), 3, d)]
    checks.append(_check("a", "every entry divides Delta_3^d", bad))

    expected = _expected_length(d)
    bad = [] if len(words) == expected == 8 * 2**d - 3 * d - 7 else [f"length {len(words)} != {expected}"]
    checks.append(_check("b", "length follows l_d = 2 l_(d-1) + 3d + 1", bad))

    bad = []
    if len(quots) != len(words) - 1:
        bad.append(f"{len(quots)} quotients for {len(words)} entries")
    for k, q in enumerate(quots, start=1):
        if not _equal_braids(words[k - 1] + q, words[k]):
            bad.append(f"#{k} {render(words[k - 1])}·{render(q)} != {render(words[k])}")
    checks.append(_check("c", "entry_(k-1) w_k = entry_k", bad))

    bad = []
    for k, q in enumerate(quots, start=1):
        qw = BraidWord(q, 3)
        if not is_sigma_positive(qw):
            bad.append(f"#{k} {render(q)} not sigma-positive")
        elif not is_drawn(qw, BraidWord(words[k - 1], 3), z):
            bad.append(f"#{k} {render(q)} not drawn from {render(words[k - 1])}")
    checks.append(_check("d", "each w_k is sigma-positive and drawn in Gamma(Delta_3^d)", bad))

    if d <= enumeration_max_d:
        reference = ordered_enumeration(z).entries
        mine = [normal_form(BraidWord(w, 3)) for w in words]
        bad = [] if len(mine) == len(reference) else [f"{len(mine)} entries vs {len(reference)} divisors"]
        bad += [f"#{k} {a} != {b}" for k, (a, b) in enumerate(zip(mine, reference)) if a != b]
        checks.append(_check("e", "S_3^d equals the sorted divisor enumeration", bad))
    else:
        checks.append(CheckResult("e", "S_3^d equals the sorted divisor enumeration", True, "skipped (d too large)"))

    bad = []
    for p in range(2, 2 * d):
        block = _insert_block(d, p)
        first, last = block.entries[0][0], block.entries[-1][0]
        if not _equal_braids(first, _delta(p - 1) + (2,)):
            bad.append(f"p={p} first {render(first)}")
        if not _equal_braids(last + (2,), _delta(p) + (1,) * d):
            bad.append(f"p={p} last {render(last)}")
    checks.append(_check("f", "first and last entries of each inserted block", bad))

    bad = [f"p={p}" for p in range(2 * d + 1) if not delta_factorization_holds(3, d, p)]
    checks.append(_check("g", "delta_(3,p) Delta_2^d tilde-delta_(3,q) = Delta_3^d", bad))

    bad = [] if delta_commutation_holds(3, d, 1) else [f"d={d}"]
    checks.append(_check("h", "delta_(3,2d) s_1 = s_(1+e) delta_(3,2d)", bad))

    return PascalReport(d, len(words), tuple(checks))


# --- Burckel codes -----------------------------------------------------------


@dataclass(frozen=True)
class BurckelCode:
    sizes: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.sizes)

    def __str__(self) -> str:
        return "(" + ", ".join(str(s) for s in self.sizes) + ")"


def _check_positive3(w: BraidWord) -> None:
    if not w.is_positive:
        raise ValueError("expected a positive word")
    if w.max_index > 2:
        raise ValueError("expected a 3-strand word")


def burckel_code(w: BraidWord) -> BurckelCode:
    """Block sizes read left to right; a final sigma_2-block is followed by an empty sigma_1-block.

    >>> str(burckel_code(BraidWord((2, 2, 2, 1, 1, 1, 2, 2, 2, 2, 2), 3)))
    '(3, 3, 5, 0)'
    """
    _check_positive3(w)
    sizes: list[int] = []
    prev = None
    for x in w.letters:
        if x == prev:
            sizes[-1] += 1
        else:
            sizes.append(1)
            prev = x
    if prev == 2:
        sizes.append(0)
    return BurckelCode(tuple(sizes))


def is_burckel_normal(w: BraidWord) -> bool:
    """Code (e_1, ..., e_l) with e_k >= 2 for 2 <= k <= l-2 (1-based)."""
    sizes = burckel_code(w).sizes
    return all(e >= 2 for e in sizes[1 : len(sizes) - 2])


def shortlex_compare(c1: BurckelCode, c2: BurckelCode) -> OrderResult:
    k1 = (len(c1.sizes), c1.sizes)
    k2 = (len(c2.sizes), c2.sizes)
    if k1 < k2:
        return OrderResult.LESS
    if k1 > k2:
        return OrderResult.GREATER
    return OrderResult.EQUAL


@lru_cache(maxsize=32)
def _lookup(d: int) -> dict[NormalForm, BraidWord]:
    return {normal_form(e.word): e.word for e in _braid_sequence(3, d).entries}


def burckel_representative(x: BraidWord, cap: int | None = None) -> BraidWord:
    """The word of S_3^d (d the degree of x) that represents x; it is Burckel-normal."""
    _check_positive3(x)
    nf = normal_form(x.with_strands(3))
    _check_degree(nf.degree, cap)
    return _lookup(nf.degree)[nf]
