"""Divisor sets Div(z), their increasing enumeration, heights and B_r-classes."""

from __future__ import annotations

import enum
import json
import os
from collections import deque
from dataclasses import dataclass, field
from functools import cmp_to_key, lru_cache

from .errors import CapExceededError
from .garside import (
    NormalForm,
    left_divides,
    normal_form,
    right_divide_generator,
    right_divides_generator,
)
from .order import (
    OrderResult,
    Polarity,
    compare,
    is_sigma_positive,
    main_generator_index,
    reduce_to_sigma_consistent,
)
from .words import BraidWord, SimpleBraid, inverse, render

__all__ = [
    "DivisorCapError",
    "DEFAULT_MAX_DIVISORS",
    "DivisorSet",
    "OrderedEnumeration",
    "BrClass",
    "BrClassPartition",
    "QuotientSequence",
    "Extremality",
    "divisors",
    "is_drawn",
    "ordered_enumeration",
    "height",
    "complexity",
    "quotient_sequence",
    "br_class_partition",
    "classify_extremal",
    "left_quotient",
]

DEFAULT_MAX_DIVISORS = int(os.environ.get("BRAIDORDER_MAX_DIVISORS", 200_000))


class DivisorCapError(CapExceededError):
    """The divisor set grew beyond the configured cap."""


def _nf(z: BraidWord | NormalForm, n: int | None = None) -> NormalForm:
    nf = z if isinstance(z, NormalForm) else normal_form(z)
    if n is not None and n > nf.n:
        nf = nf.with_strands(n)
    return nf


def _delta_exponent(z: NormalForm) -> int | None:
    """d when z = Delta_n^d, else None."""
    delta = SimpleBraid.delta(z.n).perm
    if all(p == delta for p in z.perms):
        return z.degree
    return None


def left_quotient(a: NormalForm, b: NormalForm) -> NormalForm:
    """a^{-1} b for a left divisor a of b."""
    out = b
    for i in a.word().letters:
        out = out.left_divide_generator(i)
    return out


@dataclass(frozen=True, eq=False)
class DivisorSet:
    """Left divisors of ``base`` with the sigma_i-edges of the Cayley graph between them."""

    base: NormalForm
    elements: tuple[NormalForm, ...]
    edges: tuple[tuple[int, int, int], ...]
    index: dict[NormalForm, int] = field(repr=False)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, x: NormalForm) -> bool:
        return x in self.index

    def to_dot(self) -> str:
        lines = ["digraph Gamma {"]
        for k, x in enumerate(self.elements):
            lines.append(f'  v{k} [label="{x.render()}"];')
        for s, i, t in self.edges:
            lines.append(f'  v{s} -> v{t} [label="{i}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def divisors(z: BraidWord | NormalForm, n: int | None = None, cap: int | None = None) -> DivisorSet:
    """Breadth-first closure of {1} under x -> x sigma_i inside Div(z)."""
    return _divisors(_nf(z, n), DEFAULT_MAX_DIVISORS if cap is None else cap)


@lru_cache(maxsize=256)
def _divisors(z: NormalForm, cap: int) -> DivisorSet:
    n = z.n
    d = _delta_exponent(z)
    if d is not None:
        def member(y: NormalForm) -> bool:
            return y.degree <= d
    else:
        def member(y: NormalForm) -> bool:
            return left_divides(y, z)

    start = NormalForm.identity(n)
    index = {start: 0}
    elements = [start]
    edges: list[tuple[int, int, int]] = []
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for i in range(1, n):
            y = x.times_generator(i)
            if y not in index:
                if not member(y):
                    continue
                if len(elements) >= cap:
                    raise DivisorCapError(f"more than {cap} divisors")
                index[y] = len(elements)
                elements.append(y)
                queue.append(y)
            edges.append((index[x], i, index[y]))
    return DivisorSet(z, tuple(elements), tuple(edges), index)


def _member(x: NormalForm, z: NormalForm) -> bool:
    d = _delta_exponent(z)
    if d is not None:
        return x.degree <= d
    return left_divides(x, z)


def is_drawn(w: BraidWord, start: BraidWord | NormalForm, z: BraidWord | NormalForm) -> bool:
    """Whether the path labelled w from ``start`` stays inside Div(z)."""
    n = max(w.n, start.n, z.n)
    zf, cur = _nf(z, n), _nf(start, n)
    if not _member(cur, zf):
        raise ValueError(f"{cur} is not a divisor of {zf}")
    for x in w.letters:
        i = abs(x)
        if x > 0:
            cur = cur.times_generator(i)
            if not _member(cur, zf):
                return False
        else:
            if not right_divides_generator(cur, i):
                return False
            cur = right_divide_generator(cur, i)
    return True


@dataclass(frozen=True)
class OrderedEnumeration:
    base: NormalForm
    n: int
    entries: tuple[NormalForm, ...]
    jumps: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.entries)

    def to_json(self) -> dict:
        return {
            "base": self.base.render(),
            "n": self.n,
            "entries": [x.render() for x in self.entries],
            "jumps": list(self.jumps),
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


def _cmp_nf(x: NormalForm, y: NormalForm, n: int) -> int:
    if x == y:
        return 0
    res = compare(x.word(), y.word(), n)
    return -1 if res is OrderResult.LESS else 1 if res is OrderResult.GREATER else 0


def ordered_enumeration(z: BraidWord | NormalForm, n: int | None = None) -> OrderedEnumeration:
    """Div(z) sorted by the braid ordering, with the jump height of each step."""
    zf = _nf(z, n)
    divisors(zf)  # enforces the current cap before the cached sort is consulted
    return _ordered_enumeration(zf)


@lru_cache(maxsize=64)
def _ordered_enumeration(z: NormalForm) -> OrderedEnumeration:
    n = z.n
    elements = divisors(z).elements
    entries = tuple(sorted(elements, key=cmp_to_key(lambda x, y: _cmp_nf(x, y, n))))
    jumps = []
    for x, y in zip(entries, entries[1:]):
        res = reduce_to_sigma_consistent(_quotient_word(x, y))
        if res.polarity is not Polarity.POSITIVE:
            raise AssertionError(f"enumeration not increasing at {x} -> {y}")
        jumps.append(res.main_index)
    return OrderedEnumeration(z, n, entries, tuple(jumps))


def _quotient_word(x: NormalForm, y: NormalForm) -> BraidWord:
    return BraidWord(inverse(x.word()).letters + y.word().letters, max(x.n, y.n))


def height(z: BraidWord | NormalForm, n: int | None = None, r: int = 1) -> int:
    """h_r(z): one plus the number of jumps of height >= r.

    >>> from braidorder.words import parse_word
    >>> z = parse_word("abaaba", 3)
    >>> [height(z, r=r) for r in (1, 2, 3)]
    [19, 7, 1]
    """
    if r < 1:
        raise ValueError("r must be >= 1")
    enum_ = ordered_enumeration(z, n)
    return 1 + sum(1 for j in enum_.jumps if j >= r)


def complexity(z: BraidWord | NormalForm, n: int | None = None) -> int:
    """c(z) = h_m(z) - 1 where sigma_m is the main generator of z."""
    zf = _nf(z, n)
    if zf.is_identity:
        raise ValueError("complexity is undefined for the trivial braid")
    m = main_generator_index(zf.word())
    return height(zf, None, m) - 1


@dataclass(frozen=True)
class QuotientSequence:
    words: tuple[BraidWord, ...]

    def __len__(self) -> int:
        return len(self.words)

    def rendered(self) -> list[str]:
        return [render(w) for w in self.words]


def quotient_sequence(z: BraidWord | NormalForm, n: int | None = None) -> QuotientSequence:
    """Sigma-positive words for consecutive quotients, each drawn in Gamma(z)."""
    zf = _nf(z, n)
    enum_ = ordered_enumeration(zf)
    words = []
    for x, y in zip(enum_.entries, enum_.entries[1:]):
        w = reduce_to_sigma_consistent(_quotient_word(x, y)).word
        if not is_sigma_positive(w):
            raise AssertionError(f"quotient {render(w)} is not sigma-positive")
        if not is_drawn(w, x, zf):
            raise AssertionError(f"quotient {render(w)} is not drawn from {x}")
        m = w.max_index
        if sum(1 for a in w.letters if a == m) > 1:
            raise AssertionError(f"quotient {render(w)} has several main letters")
        words.append(w)
    return QuotientSequence(tuple(words))


@dataclass(frozen=True)
class BrClass:
    members: tuple[NormalForm, ...]

    @property
    def minimum(self) -> NormalForm:
        return self.members[0]

    @property
    def maximum(self) -> NormalForm:
        return self.members[-1]


@dataclass(frozen=True)
class BrClassPartition:
    r: int
    classes: tuple[BrClass, ...]

    def __len__(self) -> int:
        return len(self.classes)


def _check_translation(c: BrClass) -> None:
    a, b = c.minimum, c.maximum
    for x in c.members:
        if not left_divides(a, x):
            raise AssertionError(f"class minimum {a} does not divide {x}")
    q = left_quotient(a, b)
    translated = tuple(a * y for y in ordered_enumeration(q).entries)
    if translated != c.members:
        raise AssertionError(f"class [{a} .. {b}] is not a translated copy of Div({q})")


def br_class_partition(
    z: BraidWord | NormalForm, n: int | None = None, r: int = 1, check: bool = True
) -> BrClassPartition:
    """Split the increasing enumeration of Div(z) at every jump of height >= r.

    With ``check`` each class is verified to be the left translate, by its
    minimum, of the increasing enumeration of Div(min^{-1} max).
    """
    if r < 1:
        raise ValueError("r must be >= 1")
    enum_ = ordered_enumeration(z, n)
    classes: list[list[NormalForm]] = [[enum_.entries[0]]]
    for y, j in zip(enum_.entries[1:], enum_.jumps):
        if j >= r:
            classes.append([y])
        else:
            classes[-1].append(y)
    part = BrClassPartition(r, tuple(BrClass(tuple(c)) for c in classes))
    if check:
        for c in part.classes:
            _check_translation(c)
    return part


class Extremality(enum.Enum):
    MINIMUM = "minimum"
    MAXIMUM = "maximum"
    BOTH = "both"
    INTERIOR = "interior"


def classify_extremal(
    x: BraidWord | NormalForm,
    n: int,
    d: int | None = None,
    r: int = 1,
    *,
    z: BraidWord | NormalForm | None = None,
) -> Extremality:
    """Position of x inside its B_r-class of Div(Delta_n^d), or of Div(z) when given.

    For Delta_n^d: x is the class maximum iff its d-th factor is right-divisible
    by Delta_r, and the class minimum iff no sigma_i (i < r) right-divides x.
    For general z the maximum test is that x sigma_i divides z for no i < r.
    """
    xf = _nf(x, n)
    is_min = not any(right_divides_generator(xf, i) for i in range(1, r))
    if z is None:
        if d is None:
            raise ValueError("give either d or z")
        if xf.degree > d:
            raise ValueError(f"{xf} is not a divisor of Delta_{n}^{d}")
        if d == 0:
            is_max = True
        else:
            last = SimpleBraid(xf.perms[d - 1]) if xf.degree >= d else SimpleBraid.identity(xf.n)
            is_max = all(i in last.right_descents for i in range(1, r))
    else:
        zf = _nf(z, n)
        if not left_divides(xf, zf):
            raise ValueError(f"{xf} is not a divisor of {zf}")
        is_max = not any(left_divides(xf.times_generator(i), zf) for i in range(1, r))
    if is_min and is_max:
        return Extremality.BOTH
    if is_min:
        return Extremality.MINIMUM
    if is_max:
        return Extremality.MAXIMUM
    return Extremality.INTERIOR
