"""Command-line interface: ``braidorder <command> ...`` or ``python -m braidorder``.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 a resource cap was exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable, Sequence

from . import counting, garside, lattice, order, pascal3
from .errors import CapExceededError
from .garside import NormalForm, delta_power_word, normal_form
from .words import BraidWord, WordParseError, parse_word, render, simple_from_word

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3
QUERY_KINDS = ("nf", "compare", "gcd", "lcm", "height", "complexity", "count")


class UsageError(Exception):
    """Bad argument combination detected after argparse."""


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True)


def _word(text: str, n: int) -> BraidWord:
    return parse_word(text, n)


def _positive(text: str, n: int) -> BraidWord:
    w = _word(text, n)
    if not w.is_positive:
        raise UsageError(f"{text!r} must be a positive word")
    return w


# --- query -------------------------------------------------------------------


def _query_result(args) -> int | str:
    n = args.n
    kind = args.kind
    words = args.words
    if kind == "nf":
        _need(words, 1, kind)
        return normal_form(_positive(words[0], n)).render()
    if kind == "compare":
        _need(words, 2, kind)
        return str(order.compare(_word(words[0], n), _word(words[1], n), n))
    if kind in ("gcd", "lcm"):
        _need(words, 2, kind)
        x, y = _positive(words[0], n), _positive(words[1], n)
        nf = garside.left_gcd_nf(normal_form(x), normal_form(y)) if kind == "gcd" else garside.right_lcm_nf(
            normal_form(x), normal_form(y)
        )
        return nf.render()
    if kind == "height":
        if words:
            _need(words, 1, kind)
            return lattice.height(_positive(words[0], n), n, args.r or 1)
        if args.d is None:
            raise UsageError("height needs a word or --d")
        return counting.height_via_matrix(n, args.d, args.r or 1)
    if kind == "complexity":
        if words:
            _need(words, 1, kind)
            return lattice.complexity(_positive(words[0], n), n)
        if args.d is None:
            raise UsageError("complexity needs a word or --d")
        return counting.complexity_via_matrix(n, args.d)
    if kind == "count":
        _need(words, 1, kind)
        if args.d is None:
            raise UsageError("count needs --d")
        try:
            t = simple_from_word(_positive(words[0], n))
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        return counting.count_last_factor(n, args.d, t)
    raise UsageError(f"unknown query {kind}")


def _need(words: list[str], k: int, kind: str) -> None:
    if len(words) != k:
        raise UsageError(f"query {kind} takes {k} word argument(s), got {len(words)}")


def cmd_query(args) -> int:
    result = _query_result(args)
    if args.format == "json":
        print(_dump({"kind": args.kind, "n": args.n, "args": list(args.words), "result": result}))
    else:
        print(result)
    return EXIT_OK


# --- enumerate ---------------------------------------------------------------


def _enumeration_base(args) -> NormalForm:
    if args.target == "delta":
        if args.d is None:
            raise UsageError("enumerate delta needs --d")
        return normal_form(delta_power_word(args.n, args.d))
    if args.word is None:
        raise UsageError("enumerate word needs a positive word")
    return normal_form(_positive(args.word, args.n))


def cmd_enumerate(args) -> int:
    z = _enumeration_base(args)
    if args.format == "dot":
        sys.stdout.write(lattice.divisors(z).to_dot())
        return EXIT_OK
    enum_ = lattice.ordered_enumeration(z)
    quotients = lattice.quotient_sequence(z).rendered() if args.quotients else None
    if args.format == "json":
        obj = enum_.to_json()
        if quotients is not None:
            obj["quotients"] = quotients
        print(_dump(obj))
        return EXIT_OK
    for k, x in enumerate(enum_.entries):
        cols = [x.render()]
        if k:
            cols.append(str(enum_.jumps[k - 1]))
            if quotients is not None:
                cols.append(quotients[k - 1])
        print("\t".join(cols))
    return EXIT_OK


# --- verify ------------------------------------------------------------------


def crosscheck_heights(n: int, d_max: int) -> tuple[int, list[str]]:
    """Heights of Delta_n^d by divisor enumeration, by the matrix, and (n <= 3) by S_n^d."""
    compared, bad = 0, []
    for d in range(d_max + 1):
        z = normal_form(delta_power_word(n, d))
        jumps = None
        if n <= 3:
            jumps = [max((abs(x) for x in w.letters), default=0) for w in pascal3.w_sequence(n, d)]
        for r in range(1, n + 1):
            values = {"lattice": lattice.height(z, None, r), "matrix": counting.height_via_matrix(n, d, r)}
            if jumps is not None:
                values["pascal3"] = 1 + sum(1 for j in jumps if j >= r)
            compared += 1
            if len(set(values.values())) != 1:
                bad.append(f"h_{r}(Delta_{n}^{d}): {values}")
    return compared, bad


def _suite_table1(args) -> dict:
    compared, bad = counting.table1_mismatches(args.nmax, args.dmax)
    return {"suite": "table1", "compared": compared, "failures": bad}


def _suite_pascal3(args) -> dict:
    bad, compared = [], 0
    for d in range(args.dmax + 1):
        report = pascal3.verify_pascal(d)
        compared += len(report.checks)
        bad += [f"d={d} {line}" for line in report.lines() if " FAIL " in line]
    return {"suite": "pascal3", "compared": compared, "failures": bad}


def _suite_crosscheck(args) -> dict:
    compared, bad = crosscheck_heights(args.n, args.dmax)
    return {"suite": "crosscheck", "compared": compared, "failures": bad}


def _suite_all(args) -> list[dict]:
    out = []
    for suite, ns in (
        (_suite_table1, argparse.Namespace(nmax=6, dmax=6)),
        (_suite_pascal3, argparse.Namespace(dmax=6)),
        (_suite_crosscheck, argparse.Namespace(n=3, dmax=5)),
        (_suite_crosscheck, argparse.Namespace(n=4, dmax=2)),
    ):
        out.append(suite(ns))
    return out


_SUITES: dict[str, Callable] = {
    "table1": _suite_table1,
    "pascal3": _suite_pascal3,
    "crosscheck": _suite_crosscheck,
}


def cmd_verify(args) -> int:
    results = _suite_all(args) if args.suite == "all" else [_SUITES[args.suite](args)]
    ok = all(not r["failures"] for r in results)
    if args.format == "json":
        print(_dump({"ok": ok, "suites": [dict(r, ok=not r["failures"]) for r in results]}))
    else:
        for r in results:
            status = "PASS" if not r["failures"] else "FAIL"
            print(f"{status} {r['suite']}: {r['compared']} checks, {len(r['failures'])} failures")
            for f in r["failures"]:
                print(f"  {f}")
    return EXIT_OK if ok else EXIT_VERIFY


# --- pascal3 -----------------------------------------------------------------


def cmd_pascal3(args) -> int:
    if args.action == "emit":
        seq = pascal3.s_sequence(3, args.d)
        quotients = [render(w) for w in pascal3.w_sequence(3, args.d)]
        if args.format == "json":
            print(
                _dump(
                    {
                        "d": args.d,
                        "entries": [
                            {"word": w, "provenance": e.provenance} for w, e in zip(seq.rendered(), seq.entries)
                        ],
                        "quotients": quotients,
                    }
                )
            )
        else:
            for w, e in zip(seq.rendered(), seq.entries):
                print(f"{w}\t{e.provenance}")
        return EXIT_OK
    report = pascal3.verify_pascal(args.d)
    if args.format == "json":
        print(_dump(report.to_json()))
    else:
        print(f"S_3^{args.d}: {report.length} entries")
        for line in report.lines():
            print(line)
    return EXIT_OK if report.ok else EXIT_VERIFY


# --- table -------------------------------------------------------------------


def cmd_table(args) -> int:
    table = counting.table1(args.nmax, args.dmax)
    if args.format == "csv":
        sys.stdout.write(counting.format_table_csv(table))
    elif args.format == "json":
        rows = [{"n": n, "r": r, "values": row} for (n, r), row in table.items()]
        print(_dump({"n_max": args.nmax, "d_max": args.dmax, "rows": rows}))
    else:
        sys.stdout.write(counting.format_table_text(table))
    return EXIT_OK


# --- parser ------------------------------------------------------------------


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return v


def _positive_int(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="braidorder", description="Braid ordering and Garside structure toolkit.")
    parser.add_argument("--max-matrix-n", type=_positive_int, help="largest n for transition matrices")
    parser.add_argument("--max-divisors", type=_positive_int, help="largest divisor set to build")
    parser.add_argument("--reduction-cap", type=_positive_int, help="handle reduction step cap")
    sub = parser.add_subparsers(dest="command", required=True)

    q = sub.add_parser("query", help="single computations")
    kinds = q.add_subparsers(dest="kind", required=True)
    for kind in QUERY_KINDS:
        k = kinds.add_parser(kind)
        k.add_argument("words", nargs="*")
        k.add_argument("--n", type=_positive_int, default=3)
        k.add_argument("--d", type=_nonneg)
        k.add_argument("--r", type=_positive_int)
        k.add_argument("--format", choices=["text", "json"], default="text")
        k.set_defaults(func=cmd_query)

    e = sub.add_parser("enumerate", help="increasing enumeration of Div(z)")
    e.add_argument("target", choices=["delta", "word"])
    e.add_argument("word", nargs="?")
    e.add_argument("--n", type=_positive_int, default=3)
    e.add_argument("--d", type=_nonneg)
    e.add_argument("--quotients", action="store_true")
    e.add_argument("--format", choices=["text", "json", "dot"], default="text")
    e.set_defaults(func=cmd_enumerate)

    v = sub.add_parser("verify", help="regression and consistency suites")
    v.add_argument("suite", choices=["all", "table1", "pascal3", "crosscheck"])
    v.add_argument("--n", type=_positive_int, default=3)
    v.add_argument("--nmax", type=_positive_int, default=6)
    v.add_argument("--dmax", type=_nonneg, default=6)
    v.add_argument("--format", choices=["text", "json"], default="text")
    v.set_defaults(func=cmd_verify)

    p = sub.add_parser("pascal3", help="explicit enumeration of Div(Delta_3^d)")
    p.add_argument("action", choices=["emit", "verify"])
    p.add_argument("--d", type=_nonneg, required=True)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_pascal3)

    t = sub.add_parser("table", help="table of heights h_r(Delta_n^d)")
    t.add_argument("--nmax", type=_positive_int, default=6)
    t.add_argument("--dmax", type=_nonneg, default=6)
    t.add_argument("--format", choices=["text", "csv", "json"], default="text")
    t.set_defaults(func=cmd_table)
    return parser


def _apply_caps(args) -> None:
    if args.max_matrix_n is not None:
        counting.DEFAULT_MAX_N = args.max_matrix_n
    if args.max_divisors is not None:
        lattice.DEFAULT_MAX_DIVISORS = args.max_divisors
    if args.reduction_cap is not None:
        order.DEFAULT_REDUCTION_CAP = args.reduction_cap


def main(argv: Sequence[str] | None = None) -> int:
    """Run one command and return its exit code.

    >>> main(["query", "compare", "ba", "ab"])
    less
    0
    """
    parser = build_parser()
    args, extra = parser.parse_known_args(argv)
    # words may follow options, as in `query lcm a --n 4 c`
    if extra and args.command == "query" and not any(x.startswith("-") for x in extra):
        args.words = list(args.words) + extra
    elif extra:
        parser.error(f"unrecognized arguments: {' '.join(extra)}")
    _apply_caps(args)
    try:
        return args.func(args)
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (WordParseError, UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
