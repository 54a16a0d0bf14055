"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 budget exceeded, 3 verification failure.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from typing import Sequence

from . import avoidance, checks, overlapfree, ruler
from .errors import BudgetExceeded, BudgetExhausted, LexLeastError, NoInfiniteWord
from .patterns import Kind, parse_pattern
from .words import render

EXIT_USAGE = 1
EXIT_BUDGET = 2
EXIT_VERIFY = 3

_POWER_RE = re.compile(r"^\s*(\d+)\s*\^\s*(\d+)\s*$")


class UsageError(Exception):
    pass


def parse_index(text: str) -> int:
    """Decimal integer or ``a^b`` shorthand, e.g. ``10^100``."""
    m = _POWER_RE.match(text)
    if m:
        return int(m.group(1)) ** int(m.group(2))
    t = text.strip()
    if not t.isdigit():
        raise UsageError(f"not a natural number: {text!r}")
    return int(t)


def _pattern(text: str):
    try:
        return parse_pattern(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _morphic_prefix(pattern, n: int):
    if pattern.kind is Kind.SQUARE:
        return ruler.w2_prefix(n)
    if pattern.kind is Kind.OVERLAP:
        return overlapfree.w2plus_prefix(n)
    raise UsageError(f"no morphism is known for {pattern}; use --method greedy")


def _emit_word(pattern, w, out: str) -> None:
    if out == "json":
        print(json.dumps({"pattern": str(pattern), "length": len(w), "letters": list(w)}))
    else:
        print(render(w))


def cmd_generate(args) -> int:
    pattern = _pattern(args.pattern)
    if args.length < 0:
        raise UsageError("--length must be non-negative")
    if args.method == "greedy":
        w = avoidance.generate_lexleast(pattern, args.length)
    elif args.method == "morphism":
        w = _morphic_prefix(pattern, args.length)
    else:
        w = avoidance.generate_lexleast(pattern, args.length)
        other = _morphic_prefix(pattern, args.length)
        if w != other:
            i = next(i for i, (x, y) in enumerate(zip(w, other)) if x != y)
            print(f"mismatch at position {i + 1}: greedy {w[i]}, morphism {other[i]}",
                  file=sys.stderr)
            return EXIT_VERIFY
    _emit_word(pattern, w, args.out)
    return 0


def cmd_eval(args) -> int:
    n = parse_index(args.index)
    if n < 1:
        raise UsageError("--index must be at least 1")
    if args.word == "w2":
        print(ruler.w2_letter(n))
    else:
        res = overlapfree.w2plus_eval(n)
        print(res.letter)
        if args.steps:
            print(f"k={res.k} steps={res.steps}", file=sys.stderr)
    return 0


def cmd_table(args) -> int:
    if args.kmax < 0:
        raise UsageError("--kmax must be non-negative")
    rows = overlapfree.table(args.which, args.kmax)
    if args.format == "csv":
        sys.stdout.write(overlapfree.table_to_csv(rows))
    else:
        print(overlapfree.table_to_json(args.which, rows))
    return 0


def cmd_verify(args) -> int:
    if args.suite == "symmetries":
        report = overlapfree.verify_symmetries(args.kmax)
    elif args.suite == "tables":
        report = checks.verify_tables(args.kmax)
    else:
        report = checks.verify_oracle(args.length)
    for line in report.lines():
        print(line)
    return 0 if report.passed else EXIT_VERIFY


def cmd_freq(args) -> int:
    if args.length < 1:
        raise UsageError("--length must be positive")
    rep = overlapfree.letter_frequency_report(args.letter, args.length)
    print(f"letter={rep.letter} length={rep.length} count={rep.count}")
    print(f"expected={float(rep.expected):.6f} relative_error={float(rep.relative_error):.3e}")
    print(f"bounds: count <= {rep.ceil_bound} and count <= 2n/a(0,k) = {float(rep.ratio_bound):.3f}: "
          f"{'ok' if rep.bound_ok else 'VIOLATED'}")
    return 0 if rep.bound_ok else EXIT_VERIFY


def cmd_backtrack(args) -> int:
    if args.alphabet < 1:
        raise UsageError("--alphabet must be at least 1")
    pattern = _pattern(args.pattern)
    try:
        stats = avoidance.generate_backtracking(pattern, args.alphabet - 1, args.length, args.budget)
    except NoInfiniteWord as exc:
        print(f"no infinite word: {exc}")
        return 0
    except BudgetExhausted as exc:
        stats = exc.stats
        print(f"budget exhausted (inconclusive) at length {len(stats.final)}", file=sys.stderr)
        _print_backtrack(stats, args.log)
        return EXIT_BUDGET
    _print_backtrack(stats, args.log)
    return 0


def _print_backtrack(stats, log: bool) -> None:
    if log:
        for ev in stats.events:
            resumed = render(ev.resumed) if ev.resumed is not None else "?"
            print(f"step {ev.step}: stuck at {render(ev.stuck)}, backtrack {ev.removed} "
                  f"to position {ev.position}, continue from {resumed}")
    print(f"steps={stats.steps} replacements={stats.replacements} backtracks={stats.backtracks} "
          f"max_retreat={stats.max_depth_retreat}")
    print(render(stats.final))


def cmd_explore(args) -> int:
    pattern = _pattern(args.pattern)
    report = checks.explore(pattern, args.length)
    print(f"pattern={pattern} length={report.length}")
    print(f"distinct letters: {sorted(report.letters)}")
    if report.first_large is None:
        print(f"no letter >= {report.threshold} in this prefix (nothing is claimed beyond it)")
    else:
        print(f"first letter >= {report.threshold} at position {report.first_large}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lexleast", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="print a prefix of a lexicographically least word")
    p.add_argument("--pattern", default="overlap")
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--method", choices=["greedy", "morphism", "both"], default="greedy")
    p.add_argument("--out", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("eval", help="random access to a letter")
    p.add_argument("--word", choices=["w2", "w2plus"], default="w2plus")
    p.add_argument("--index", required=True, help="decimal or a^b")
    p.add_argument("--steps", action="store_true", help="report the operation count on stderr")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("table", help="a(h,k) or d(h,k) table")
    p.add_argument("--which", choices=["a", "d"], default="a")
    p.add_argument("--kmax", type=int, default=5)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="check identities; exit 3 on failure")
    p.add_argument("--suite", choices=["symmetries", "tables", "oracle"], default="symmetries")
    p.add_argument("--kmax", type=int, default=5)
    p.add_argument("--length", type=int, default=10_000, help="prefix length for the oracle suite")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("freq", help="letter frequency in the overlap-free word")
    p.add_argument("--letter", type=int, required=True)
    p.add_argument("--length", type=int, required=True)
    p.set_defaults(func=cmd_freq)

    p = sub.add_parser("backtrack", help="backtracking search over a finite alphabet")
    p.add_argument("--alphabet", type=int, default=3, help="alphabet size m, letters 0..m-1")
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--budget", type=int, default=1_000_000)
    p.add_argument("--pattern", default="square")
    p.add_argument("--log", action="store_true", help="print every backtrack event")
    p.set_defaults(func=cmd_backtrack)

    p = sub.add_parser("explore", help="greedy word for another pattern; report its letters")
    p.add_argument("--pattern", default="frac:5/2")
    p.add_argument("--length", type=int, default=10_000)
    p.set_defaults(func=cmd_explore)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else 0
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ValueError, LexLeastError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
