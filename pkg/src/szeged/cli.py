"""Command-line front end.

Subcommands: compute, gen, enum, rank, verify. Exit codes: 0 success,
1 a checked statement failed (or a compute row was flagged), 2 usage,
input or guard error.
"""
from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from . import families as fam
from .generate import CLASSES, GUARD_ENV, GuardError, connected_guard, generate, load_or_generate, write_graph6
from .graph import NotConnectedError
from .graph6 import Graph6Error, emit_graph6, parse_graph6
from .indices import index_profile
from .report import dumps, fmt_value, report_document, summary_table
from .verify import THEOREMS, rank, run_check

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _frac(x) -> str:
    return str(fmt_value(x))


def cmd_compute(args: argparse.Namespace) -> int:
    src = open(args.input, encoding="ascii") if args.input and args.input != "-" else sys.stdin
    out = sys.stdout
    out.write("\t".join(["n", "m", "girth", "W", "Sz", "4Sz*", "Sz-W", "Sz/W", "Sz*/W"]) + "\n")
    flagged = 0
    try:
        for lineno, line in enumerate(src, 1):
            if not line.strip():
                continue
            try:
                g = parse_graph6(line)
                p = index_profile(g)
            except (Graph6Error, NotConnectedError, ValueError) as exc:
                flagged += 1
                out.write(f"# line {lineno}: {exc}\n")
                continue
            girth = "-" if p.girth is None else str(p.girth)
            if p.n < 2:
                ratios = ["-", "-"]
            else:
                ratios = [_frac(p.sz_over_w), _frac(p.szstar_over_w)]
            row = [str(p.n), str(p.m), girth, str(p.wiener), str(p.szeged), str(p.szstar_x4),
                   str(p.sz_minus_w)] + ratios
            out.write("\t".join(row) + "\n")
    finally:
        if src is not sys.stdin:
            src.close()
    return EXIT_FAIL if flagged else EXIT_OK


def cmd_gen(args: argparse.Namespace) -> int:
    graphs = []
    for text in args.family:
        try:
            graphs.append(fam.parse_family(text).build())
        except ValueError as exc:
            raise UsageError(f"{text}: {exc}") from None
    for g in graphs:
        sys.stdout.write(emit_graph6(g) + "\n")
    return EXIT_OK


def _graphs(args: argparse.Namespace):
    if getattr(args, "cache", None):
        return load_or_generate(args.cls, args.n, args.cache, args.override_guard, args.threads)
    return generate(args.cls, args.n, args.override_guard, args.threads)


def cmd_enum(args: argparse.Namespace) -> int:
    graphs = _graphs(args)
    if args.out:
        count = write_graph6(args.out, graphs)
    else:
        for g in graphs:
            sys.stdout.write(emit_graph6(g) + "\n")
        count = len(graphs)
    sys.stderr.write(f"{count} graphs\n")
    return EXIT_OK


_MEASURES = {
    "W": lambda p: p.wiener,
    "Sz": lambda p: p.szeged,
    "Sz-W": lambda p: p.sz_minus_w,
    "Sz/W": lambda p: p.sz_over_w,
    "Sz*/W": lambda p: p.szstar_over_w,
}


def cmd_rank(args: argparse.Namespace) -> int:
    measure = _MEASURES[args.measure]
    report = rank(_graphs(args), lambda g: measure(index_profile(g)),
                  f"{args.cls} n={args.n}", args.measure, descending=not args.ascending, canonical=True)
    out = sys.stdout
    out.write(f"# {report.spec}: {report.size} graphs, {len(report.tiers)} tiers, by {args.measure}\n")
    for i, tier in enumerate(report.top(args.top), 1):
        for e in tier.members:
            out.write(f"{i}\t{_frac(tier.value)}\t{e.label}\t{e.graph6}\n")
    return EXIT_OK


def _parse_ns(values: Optional[Sequence[str]]) -> list[Optional[int]]:
    if not values:
        return [None]
    out: list[Optional[int]] = []
    for v in values:
        for part in v.split(","):
            try:
                out.append(int(part))
            except ValueError:
                raise UsageError(f"--n expects integers, got {part!r}") from None
    return out


def cmd_verify(args: argparse.Namespace) -> int:
    results = []
    for n in _parse_ns(args.n):
        try:
            results.append(run_check(args.theorem, n, restricted=not args.full,
                                     override_guard=args.override_guard, seed=args.seed, trials=args.trials))
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    command = " ".join(["verify", args.theorem] + (["--n"] + args.n if args.n else [])
                       + (["--full"] if args.full else []))
    guards = {"max_connected_n": connected_guard(), "override": bool(args.override_guard)}
    doc = report_document(results, command, args.seed, guards, args.timing)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(dumps(doc))
    if args.json:
        sys.stdout.write(dumps(doc))
    else:
        sys.stdout.write(summary_table(results))
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="szeged", description="Wiener / Szeged index toolkit and extremal-graph checker.")
    sub = p.add_subparsers(dest="command", required=True)

    def guard_flags(sp: argparse.ArgumentParser) -> None:
        sp.add_argument("--override-guard", "--i-know-this-is-big", dest="override_guard", action="store_true",
                        help=f"allow connected enumeration above the guard (env {GUARD_ENV})")
        sp.add_argument("--threads", type=int, default=1, help="worker processes for connected enumeration")

    sp = sub.add_parser("compute", help="indices for graph6 input, one row per line")
    sp.add_argument("input", nargs="?", help="graph6 file (default: stdin)")
    sp.set_defaults(func=cmd_compute)

    sp = sub.add_parser("gen", help="emit a named family member as graph6")
    sp.add_argument("family", nargs="+", help="family id, e.g. lollipop:10:4 or crpaths:3:5,2,0")
    sp.set_defaults(func=cmd_gen)

    for name, func, hlp in (("enum", cmd_enum, "write a class as canonical-key-sorted graph6"),
                            ("rank", cmd_rank, "top tiers of a class by an index")):
        sp = sub.add_parser(name, help=hlp)
        sp.add_argument("--class", dest="cls", required=True, choices=CLASSES)
        sp.add_argument("--n", type=int, required=True)
        guard_flags(sp)
        if name == "enum":
            sp.add_argument("--out", help="output file (default: stdout)")
        else:
            sp.add_argument("--top", type=int, default=5, help="number of tiers to show")
            sp.add_argument("--measure", choices=sorted(_MEASURES), default="W")
            sp.add_argument("--ascending", action="store_true", help="smallest values first")
            sp.add_argument("--cache", help="directory of <class>_<n>.g6 corpora to reuse")
        sp.set_defaults(func=func)

    sp = sub.add_parser("verify", help="check a theorem or the lemma suites; writes a report")
    sp.add_argument("theorem", choices=THEOREMS)
    sp.add_argument("--n", nargs="+", help="order(s); comma lists allowed")
    mode = sp.add_mutually_exclusive_group()
    mode.add_argument("--restricted", action="store_true", help="thm2.4 over unicyclic + bicyclic (default)")
    mode.add_argument("--full", action="store_true", help="thm2.4 over all cyclic graphs (stretch)")
    sp.add_argument("--out", help="write the JSON report here")
    sp.add_argument("--json", action="store_true", help="print the JSON report instead of a table")
    sp.add_argument("--timing", action="store_true", help="include runtime_ms in the report")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--trials", type=int, default=1000)
    guard_flags(sp)
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (UsageError, GuardError, Graph6Error, OSError) as exc:
        sys.stderr.write(f"szeged {args.command}: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
