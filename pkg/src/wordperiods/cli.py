"""Command-line entry point.

Exit status: 0 on success, 1 when a sweep finds a falsifying case (a violation,
a mismatch, a stalled walk, a failed construction), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Callable, TextIO

from .construct import FillStats, construct_word
from .errors import (
    ConstructionImpossible,
    ConstructionMismatch,
    InvalidArgument,
    WalkStalled,
)
from .oracle import CACHE_ENV, cached_catalog, verify_theorem_equivalence
from .periodset import PeriodSet, check_condition_iii, check_condition_iv
from .prop1 import (
    WalkSpec,
    find_exercise_counterexamples,
    find_tightness_witnesses,
    stockpile_walk,
    verify_prop1_exhaustive,
)
from .words import Word, border_lengths, periods_by_borders, periods_by_scan

OK, FOUND, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _word(text: str) -> Word:
    try:
        return Word.parse(text)
    except InvalidArgument as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _period_set(text: str) -> PeriodSet:
    try:
        return PeriodSet.parse(text)
    except InvalidArgument as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return value


def _emit(out: TextIO, args, text: str, data) -> None:
    if args.format == "json":
        out.write(json.dumps(data, sort_keys=True) + "\n")
    else:
        out.write(text + "\n")


def _pair_line(pair) -> str:
    return f"w={pair.w} v={pair.v} q={pair.q} p={pair.p} t={pair.t}"


# --- subcommands ------------------------------------------------------------


def cmd_periods(args, out) -> int:
    compute = periods_by_scan if args.method == "scan" else periods_by_borders
    pi = compute(args.word)
    _emit(out, args, str(pi), {"word": str(args.word), "periods": list(pi.members)})
    return OK


def cmd_borders(args, out) -> int:
    b = border_lengths(args.word)
    _emit(out, args, "{" + ",".join(map(str, b)) + "}", {"word": str(args.word), "borders": list(b)})
    return OK


def cmd_check_set(args, out) -> int:
    pi = args.set
    reports = [check_condition_iii(pi), check_condition_iv(pi)]
    lines = [f"set={pi}"]
    for r in reports:
        lines.append(f"{r.condition}: {'satisfied' if r.satisfied else 'violated'}")
        lines += [f"  {v}" for v in r.violations]
    data = {"set": str(pi), **{r.condition: r.as_dict() for r in reports}}
    _emit(out, args, "\n".join(lines), data)
    return OK


def cmd_construct(args, out) -> int:
    stats = FillStats()
    word = construct_word(args.set, stats)
    _emit(
        out,
        args,
        f"{word}\nfills={stats.fills} fallbacks={stats.fallbacks}",
        {"set": str(args.set), "word": str(word), "fills": stats.fills, "fallbacks": stats.fallbacks},
    )
    return OK


def cmd_walk(args, out) -> int:
    spec = WalkSpec.build(args.n, args.p, args.q, args.t, args.side, args.k)
    try:
        trace = stockpile_walk(spec)
    except WalkStalled as exc:
        _emit(out, args, exc.trace.to_text(), {**exc.trace.as_dict(), "stalled": True})
        print(f"falsified: {exc}", file=sys.stderr)
        return FOUND
    _emit(out, args, trace.to_text(), trace.as_dict())
    return OK


def cmd_prop1_verify(args, out) -> int:
    report = verify_prop1_exhaustive(args.n_max, args.alphabet, args.workers)
    lines = [
        f"n_max={report.n_max} alphabet={report.alphabet_size} words={report.words} "
        f"pairs={report.pairs} bounded_pairs={report.bounded_pairs} violations={len(report.violations)}"
    ]
    lines += [f"violation {d['w']} {d['v']} t={d['t']}" for d in report.as_dict()["violations"]]
    _emit(out, args, "\n".join(lines), report.as_dict())
    return FOUND if report.violations else OK


def _pairs_command(finder: Callable, fargs: Callable):
    def command(args, out) -> int:
        pairs = finder(*fargs(args))
        lines = [_pair_line(p) for p in pairs] + [f"count={len(pairs)}"]
        _emit(out, args, "\n".join(lines), {"count": len(pairs), "pairs": [p.as_dict() for p in pairs]})
        return OK

    return command


cmd_counterexamples = _pairs_command(find_exercise_counterexamples, lambda a: (a.n, a.alphabet))
cmd_tightness = _pairs_command(find_tightness_witnesses, lambda a: (a.n, a.alphabet))


def cmd_catalog(args, out) -> int:
    catalog = cached_catalog(args.n, args.alphabet, args.cache_dir, args.workers)
    data = {
        "n": catalog.n,
        "alphabet": catalog.alphabet_size,
        "words": catalog.word_count,
        "entries": [
            {"mask": pi.to_hex(), "set": str(pi), "witness": str(catalog.witness(pi))} for pi in catalog.keys()
        ],
    }
    _emit(out, args, catalog.to_text().rstrip("\n"), data)
    return OK


def cmd_verify_theorem(args, out) -> int:
    catalog = cached_catalog(args.n, 2, args.cache_dir, args.workers)
    report = verify_theorem_equivalence(args.n, args.workers, catalog)
    lines = [
        f"n={report.n} sets={report.sets_checked} realizable={report.realizable} "
        f"constructed={report.constructed} fallbacks={report.fallbacks} mismatches={len(report.mismatches)}"
    ]
    lines += [f"mismatch set={s} i={i} iii={iii} iv={iv} construct={c}" for s, i, iii, iv, c in report.mismatches]
    _emit(out, args, "\n".join(lines), report.as_dict())
    return FOUND if report.mismatches else OK


# --- parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--workers", type=_positive, default=1, help="parallel partitions (processes)")
    common.add_argument(
        "--cache-dir",
        default=os.environ.get(CACHE_ENV),
        help=f"catalog cache directory (default: ${CACHE_ENV})",
    )

    parser = _Parser(prog="wordperiods", description="Periods of words, one-mismatch sweeps, and period-set realizability.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(func=func)
        return p

    p = add("periods", cmd_periods, "period set of a word")
    p.add_argument("word", type=_word)
    p.add_argument("--method", choices=("borders", "scan"), default="borders")

    p = add("borders", cmd_borders, "proper border lengths of a word")
    p.add_argument("word", type=_word)

    p = add("check-set", cmd_check_set, "evaluate conditions iii and iv on a period set")
    p.add_argument("set", type=_period_set)

    p = add("construct", cmd_construct, "binary word realizing a period set")
    p.add_argument("set", type=_period_set)

    p = add("walk", cmd_walk, "stockpile walk trace")
    for name in ("n", "p", "q", "t"):
        p.add_argument(name, type=_positive)
    p.add_argument("--side", choices=("y", "x"), default="y")
    p.add_argument("--k", type=_positive, default=None, help="right stockpile (default: least admissible)")

    p = add("prop1-verify", cmd_prop1_verify, "exhaustive one-mismatch sweep")
    p.add_argument("--n-max", type=_positive, required=True)
    p.add_argument("--alphabet", type=int, choices=(2, 3), default=2)

    p = add("counterexamples", cmd_counterexamples, "refutations of the p + q <= n statement")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--alphabet", type=int, default=2)

    p = add("tightness", cmd_tightness, "pairs showing n // 2 cannot be raised")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--alphabet", type=int, default=2)

    p = add("catalog", cmd_catalog, "realizable period sets with least witnesses")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--alphabet", type=int, default=2)

    p = add("verify-theorem", cmd_verify_theorem, "compare realizability with conditions iii/iv")
    p.add_argument("--n", type=_positive, required=True)
    return parser


def main(argv: list[str] | None = None, out: TextIO | None = None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return USAGE
    try:
        return args.func(args, out)
    except InvalidArgument as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return USAGE
    except (ConstructionMismatch, ConstructionImpossible) as exc:
        print(f"falsified: {exc}", file=sys.stderr)
        return FOUND


if __name__ == "__main__":
    sys.exit(main())
