"""Counting normal sequences with the transition matrix of simple braids.

b_{n,d}(t) is the number of divisors of Delta_n^d whose d-th normal factor is t.
It is the t-entry of (1, ..., 1) M^(d-1), where M[s, t] = 1 iff (s, t) is a
normal pair.  Heights of Delta_n^d are entries of (1, ..., 1) M^d.  All counts
are Python integers (numpy object arrays), so there is no overflow.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

import numpy as np

from .errors import CapExceededError
from .words import SimpleBraid, all_simple_braids

__all__ = [
    "MatrixCapError",
    "DEFAULT_MAX_N",
    "TransitionMatrix",
    "QuadraticSurd",
    "transition_matrix",
    "count_vector",
    "count_last_factor",
    "height_via_matrix",
    "complexity_via_matrix",
    "closed_form_height",
    "h1_delta_squared_recurrence",
    "carlitz_recurrence_h1_delta_squared",
    "h1_delta3_recurrence",
    "h1_delta4_recurrence",
    "floor_factorial_e",
    "table1",
    "table1_mismatches",
    "REFERENCE_TABLE",
    "format_table_csv",
    "format_table_text",
    "CLOSED_FORMS",
]

DEFAULT_MAX_N = int(os.environ.get("BRAIDORDER_MAX_MATRIX_N", 6))


class MatrixCapError(CapExceededError):
    """Strand count beyond the configured transition-matrix cap."""


@dataclass(frozen=True, eq=False)
class TransitionMatrix:
    n: int
    order: tuple[SimpleBraid, ...]
    entries: np.ndarray = field(repr=False)

    def index_of(self, s: SimpleBraid) -> int:
        return self._positions[s.perm]

    @property
    def _positions(self) -> dict[tuple[int, ...], int]:
        pos = self.__dict__.get("_pos")
        if pos is None:
            pos = {s.perm: k for k, s in enumerate(self.order)}
            object.__setattr__(self, "_pos", pos)
        return pos

    def entry(self, s: SimpleBraid, t: SimpleBraid) -> int:
        return int(self.entries[self.index_of(s), self.index_of(t)])

    def sub_matrix(self, order: list[SimpleBraid]) -> np.ndarray:
        idx = [self.index_of(s) for s in order]
        return self.entries[np.ix_(idx, idx)]


def _check_n(n: int, max_n: int | None) -> None:
    cap = DEFAULT_MAX_N if max_n is None else max_n
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > cap:
        raise MatrixCapError(f"n = {n} exceeds the matrix cap {cap}")


def transition_matrix(n: int, max_n: int | None = None) -> TransitionMatrix:
    _check_n(n, max_n)
    return _transition_matrix(n)


@lru_cache(maxsize=None)
def _transition_matrix(n: int) -> TransitionMatrix:
    order = tuple(all_simple_braids(n))
    # (s, t) normal iff L(t) is a subset of R(s); bitmasks keep the 720 x 720 case fast
    right = np.array([sum(1 << i for i in s.right_descents) for s in order], dtype=np.int64)
    left = np.array([sum(1 << i for i in s.left_descents) for s in order], dtype=np.int64)
    entries = ((left[None, :] & ~right[:, None]) == 0).astype(np.int8)
    return TransitionMatrix(n, order, entries)


@lru_cache(maxsize=None)
def _object_matrix(n: int) -> np.ndarray:
    return _transition_matrix(n).entries.astype(object)


def count_vector(n: int, d: int, max_n: int | None = None) -> list[int]:
    """(1, ..., 1) M_n^(d-1), i.e. b_{n,d}(t) for every t (d >= 1)."""
    _check_n(n, max_n)
    if d < 1:
        raise ValueError("d must be >= 1")
    return list(_power_row(n, d - 1))


@lru_cache(maxsize=None)
def _power_row(n: int, k: int) -> tuple[int, ...]:
    """(1, ..., 1) M_n^k, by iterated vector-matrix products."""
    if k == 0:
        return (1,) * factorial(n)
    prev = np.array(_power_row(n, k - 1), dtype=object)
    return tuple(int(v) for v in prev.dot(_object_matrix(n)))


def count_last_factor(n: int, d: int, t: SimpleBraid, max_n: int | None = None) -> int:
    """b_{n,d}(t)."""
    tm = transition_matrix(n, max_n)
    return count_vector(n, d, max_n)[tm.index_of(t)]


def height_via_matrix(n: int, d: int, r: int, max_n: int | None = None) -> int:
    """h_r(Delta_n^d) = ((1, ..., 1) M_n^d) at Delta_r."""
    if not 1 <= r <= n:
        raise ValueError(f"need 1 <= r <= n, got r = {r}, n = {n}")
    if d < 0:
        raise ValueError("d must be >= 0")
    if d == 0:
        return 1
    return count_last_factor(n, d + 1, SimpleBraid.delta(n, r), max_n)


def complexity_via_matrix(n: int, d: int, max_n: int | None = None) -> int:
    """c(Delta_n^d), computed as h_{n-1} - 1 and cross-checked against b_{n,d+1}(Delta_{n-1}) - 1."""
    if n < 2:
        raise ValueError("n must be >= 2")
    via_height = height_via_matrix(n, d, n - 1, max_n) - 1
    if d >= 1:
        via_count = count_last_factor(n, d + 1, SimpleBraid.delta(n, n - 1), max_n) - 1
        if via_count != via_height:
            raise AssertionError("matrix routes for the complexity disagree")
    return via_height


# --- exact closed forms ------------------------------------------------------


@dataclass(frozen=True)
class QuadraticSurd:
    """a + b*sqrt(root) with rational a, b."""

    a: Fraction
    b: Fraction = Fraction(0)
    root: int = 6

    def _coerce(self, other) -> QuadraticSurd:
        if isinstance(other, QuadraticSurd):
            if other.root != self.root:
                raise ValueError("different radicands")
            return other
        return QuadraticSurd(Fraction(other), Fraction(0), self.root)

    def __add__(self, other) -> QuadraticSurd:
        o = self._coerce(other)
        return QuadraticSurd(self.a + o.a, self.b + o.b, self.root)

    __radd__ = __add__

    def __neg__(self) -> QuadraticSurd:
        return QuadraticSurd(-self.a, -self.b, self.root)

    def __sub__(self, other) -> QuadraticSurd:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> QuadraticSurd:
        return self._coerce(other) - self

    def __mul__(self, other) -> QuadraticSurd:
        o = self._coerce(other)
        return QuadraticSurd(
            self.a * o.a + self.root * self.b * o.b, self.a * o.b + self.b * o.a, self.root
        )

    __rmul__ = __mul__

    def __pow__(self, k: int) -> QuadraticSurd:
        out = QuadraticSurd(Fraction(1), Fraction(0), self.root)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conjugate(self) -> QuadraticSurd:
        return QuadraticSurd(self.a, -self.b, self.root)

    def to_int(self) -> int:
        if self.b != 0 or self.a.denominator != 1:
            raise ValueError(f"{self} is not an integer")
        return int(self.a)


def _surd(a, b=0) -> QuadraticSurd:
    return QuadraticSurd(Fraction(a), Fraction(b))


def _h_delta4(d: int, coeff: QuadraticSurd, two_pow: Fraction, lin: int, const: int) -> int:
    rho1 = _surd(3, 1)
    val = coeff * rho1**d + coeff.conjugate() * rho1.conjugate() ** d
    val = val + two_pow * 2**d + lin * d + const
    return val.to_int()


def _h1_delta3(d: int) -> int:
    return 8 * 2**d - 3 * d - 7


def _h2_delta3(d: int) -> int:
    return 2 * 2**d - 1


def _h1_delta4(d: int) -> int:
    return _h_delta4(d, Fraction(3, 20) * _surd(32, 13), Fraction(-128, 5), 6, 17)


def _h2_delta4(d: int) -> int:
    return _h_delta4(d, Fraction(1, 20) * _surd(32, 13), Fraction(-16, 5), 0, 1)


def _h3_delta4(d: int) -> int:
    return _h_delta4(d, Fraction(1, 20) * _surd(4, 1), Fraction(8, 5), 0, -1)


def _h_delta1(n: int, r: int) -> int:
    if not 1 <= r <= n:
        raise ValueError("need 1 <= r <= n")
    return factorial(n) // factorial(r)


def _h_top_delta2(n: int) -> int:
    return 2**n - 1


def _h_second_delta2(n: int) -> int:
    return 2 * 3**n - (n + 6) * 2 ** (n - 1) + 1


def _h_top_delta3(n: int) -> int:
    return sum(factorial(n) // factorial(i) for i in range(n))


def floor_factorial_e(n: int, terms: int = 60) -> int:
    """floor(n! * e) from rational bounds on the exponential series."""
    nf = factorial(n)
    partial = sum(Fraction(nf, factorial(k)) for k in range(terms))
    # the tail after `terms` terms is below 2 / terms! times n!
    upper = partial + Fraction(2 * nf, factorial(terms))
    lo, hi = partial.numerator // partial.denominator, upper.numerator // upper.denominator
    if lo != hi:
        raise ArithmeticError("series bounds too loose; raise `terms`")
    return lo


def h1_delta_squared_recurrence(n: int) -> int:
    """h_1(Delta_n^2) from the alternating binomial-square recurrence seeded by 1 at n = 0."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return _h1_sq(n)


@lru_cache(maxsize=None)
def _h1_sq(n: int) -> int:
    if n == 0:
        return 1
    return sum((-1) ** (n + i + 1) * comb(n, i) ** 2 * _h1_sq(i) for i in range(n))


# alternative name, after the classical enumeration of pairs of permutations
carlitz_recurrence_h1_delta_squared = h1_delta_squared_recurrence


def h1_delta3_recurrence(d: int) -> int:
    """h_1(Delta_3^d) = 2 h_1(Delta_3^(d-1)) + 3d + 1, from 1 at d = 0."""
    h = 1
    for k in range(1, d + 1):
        h = 2 * h + 3 * k + 1
    return h


def h1_delta4_recurrence(d: int) -> int:
    """h_1(Delta_4^d) = 6 h(d-1) - 3 h(d-2) + 32*2^d - 12d - 34, with h(-1) = 0, h(0) = 1."""
    prev, cur = 0, 1
    for k in range(1, d + 1):
        prev, cur = cur, 6 * cur - 3 * prev + 32 * 2**k - 12 * k - 34
    return cur


# selector -> (function, parameter name, description)
CLOSED_FORMS = {
    "h1_delta3": (_h1_delta3, "d", "h_1(Delta_3^d) = 8*2^d - 3d - 7"),
    "h2_delta3": (_h2_delta3, "d", "h_2(Delta_3^d) = 2*2^d - 1"),
    "h1_delta4": (_h1_delta4, "d", "h_1(Delta_4^d), sqrt(6) form"),
    "h2_delta4": (_h2_delta4, "d", "h_2(Delta_4^d), sqrt(6) form"),
    "h3_delta4": (_h3_delta4, "d", "h_3(Delta_4^d), sqrt(6) form"),
    "h_delta1": (_h_delta1, "n,r", "h_r(Delta_n) = n!/r!"),
    "h_top_delta2": (_h_top_delta2, "n", "h_{n-1}(Delta_n^2) = 2^n - 1"),
    "h_second_delta2": (_h_second_delta2, "n", "h_{n-2}(Delta_n^2) = 2*3^n - (n+6)*2^(n-1) + 1"),
    "h_top_delta3": (_h_top_delta3, "n", "h_{n-1}(Delta_n^3) = sum_{i<n} n!/i!"),
    "h1_delta3_rec": (h1_delta3_recurrence, "d", "h_1(Delta_3^d) by its order-1 recurrence"),
    "h1_delta4_rec": (h1_delta4_recurrence, "d", "h_1(Delta_4^d) by its order-2 recurrence"),
    "h1_delta_sq_rec": (h1_delta_squared_recurrence, "n", "h_1(Delta_n^2) by recurrence"),
}


def closed_form_height(selector: str, **params: int) -> int:
    """Evaluate one of the exact formulas in CLOSED_FORMS.

    >>> closed_form_height("h_delta1", n=5, r=3)
    20
    """
    try:
        fn, names, _ = CLOSED_FORMS[selector]
    except KeyError:
        raise ValueError(f"unknown selector {selector!r}") from None
    wanted = names.split(",")
    if sorted(params) != sorted(wanted):
        raise ValueError(f"{selector} takes parameters {wanted}, got {sorted(params)}")
    if "d" in params and params["d"] < 0:
        raise ValueError("d must be >= 0")
    if "n" in params:
        low = {"h_second_delta2": 3, "h_top_delta2": 2, "h1_delta_sq_rec": 0}.get(selector, 1)
        if params["n"] < low:
            raise ValueError(f"{selector} needs n >= {low}")
    return fn(*(params[k] for k in wanted))


# --- reference table of heights ---------------------------------------------

# Reference values of h_r(Delta_n^d) for 1 <= r < n <= 6 and d = 0..6, keyed by (n, r).
REFERENCE_TABLE: dict[tuple[int, int], tuple[int, ...]] = {
    (2, 1): (1, 2, 3, 4, 5, 6, 7),
    (3, 1): (1, 6, 19, 48, 109, 234, 487),
    (3, 2): (1, 3, 7, 15, 31, 63, 127),
    (4, 1): (1, 24, 211, 1380, 8077, 45252, 249223),
    (4, 2): (1, 12, 83, 492, 2765, 15240, 83399),
    (4, 3): (1, 4, 15, 64, 309, 1600, 8547),
    (5, 1): (1, 120, 3651, 79140, 1548701, 29375460, 551997751),
    (5, 2): (1, 60, 1501, 30540, 585811, 11044080, 207154921),
    (5, 3): (1, 20, 311, 5260, 94881, 1755360, 32741851),
    (5, 4): (1, 5, 31, 325, 4931, 86565, 1590231),
    (6, 1): (1, 720, 90921, 7952040, 634472921, 49477263360, 3836712177121),
    (6, 2): (1, 360, 38559, 3228300, 254718389, 19808530620, 1535016069499),
    (6, 3): (1, 120, 8727, 649260, 49654757, 3831626580, 296361570667),
    (6, 4): (1, 30, 1075, 61620, 4387195, 332578230, 25612893355),
    (6, 5): (1, 6, 63, 1956, 116423, 8448606, 643888543),
}


def table1_mismatches(n_max: int = 6, d_max: int = 6) -> tuple[int, list[str]]:
    """Compare the matrix route against REFERENCE_TABLE; returns (#compared, mismatch descriptions)."""
    compared, bad = 0, []
    for (n, r), row in REFERENCE_TABLE.items():
        if n > n_max:
            continue
        for d, expected in enumerate(row[: d_max + 1]):
            got = height_via_matrix(n, d, r)
            compared += 1
            if got != expected:
                bad.append(f"h_{r}(Delta_{n}^{d}) = {got}, expected {expected}")
    return compared, bad


def table1(n_max: int, d_max: int, max_n: int | None = None) -> dict[tuple[int, int], list[int]]:
    """{(n, r): [h_r(Delta_n^d) for d = 0..d_max]} for 1 <= r < n <= n_max (r = 1 when n = 1)."""
    _check_n(n_max, max_n)
    table: dict[tuple[int, int], list[int]] = {}
    for n in range(1, n_max + 1):
        for r in range(1, max(n, 2)):
            table[(n, r)] = [height_via_matrix(n, d, r, max_n) for d in range(d_max + 1)]
    return table


def format_table_csv(table: dict[tuple[int, int], list[int]]) -> str:
    d_max = len(next(iter(table.values()))) - 1
    lines = ["r\\d," + ",".join(str(d) for d in range(d_max + 1))]
    for (n, r), row in table.items():
        lines.append(f"h_{r}(Delta_{n}^d)," + ",".join(str(v) for v in row))
    return "\n".join(lines) + "\n"


def _group(v: int) -> str:
    return f"{v:,}".replace(",", " ")


def format_table_text(table: dict[tuple[int, int], list[int]]) -> str:
    d_max = len(next(iter(table.values()))) - 1
    cells = [["d"] + [str(d) for d in range(d_max + 1)]]
    for (n, r), row in table.items():
        cells.append([f"h_{r}(Delta_{n}^d)"] + [_group(v) for v in row])
    widths = [max(len(row[k]) for row in cells) for k in range(len(cells[0]))]
    lines = []
    for row in cells:
        head = row[0].ljust(widths[0])
        lines.append("  ".join([head] + [c.rjust(w) for c, w in zip(row[1:], widths[1:])]))
    return "\n".join(lines) + "\n"
