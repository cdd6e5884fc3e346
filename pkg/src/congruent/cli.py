"""Command-line front end.  Every subcommand is a thin wrapper over the library."""
from __future__ import annotations

import argparse
import logging
import sys
from fractions import Fraction

from . import curve, pq_codec, search, table_io, tunnell
from .pq_codec import InvariantError, NotRepresentedError

PAPER_BOUND = 25_000


class UsageError(Exception):
    pass


def _fraction(text: str) -> Fraction:
    try:
        return table_io._parse_fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def _out(args, text: str) -> None:
    if getattr(args, "out", None):
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_tunnell(args) -> int:
    lo, hi = args.range
    for n in tunnell.congruent_numbers(lo, hi):
        print(n)
    return 0


def cmd_search(args) -> int:
    bound = PAPER_BOUND if args.paper_bound else args.bound
    cfg = search.SearchConfig(bound, args.n_max, args.partitions)
    table = search.build_min_height_table(cfg)
    _out(args, table_io.emit_table(table[n] for n in sorted(table)))
    return 0


def cmd_pq(args) -> int:
    if args.action == "decode":
        sides = pq_codec.pq_to_sides(args.n, pq_codec.PQPair(args.p, args.q))
        print(sides)
    elif args.action == "encode":
        if args.alpha is None or args.beta is None:
            raise UsageError("pq encode needs --alpha and --beta")
        pq = pq_codec.sides_to_pq(pq_codec.TriangleSides.from_legs(args.n, args.alpha, args.beta))
        print(pq.P, pq.Q)
    else:
        c = pq_codec.compress_pq(pq_codec.PQPair(args.p, args.q), args.n)
        print(c.P0, c.P1, c.Q0, c.Q1)
    return 0


def _show(p: curve.CurvePoint) -> str:
    return "O" if p.is_infinity else f"{p.x} {p.y}"


def cmd_curve(args) -> int:
    p = curve.make_point(args.n, args.x, args.y)
    if args.action == "double":
        q, tau = curve.double_affine(args.n, p)
        print(_show(q))
        print(f"tau {tau}")
    elif args.action == "mul":
        print(_show(curve.scalar_mul(args.k, p)))
    elif args.action == "halve":
        for q in curve.halve(args.n, p):
            print(_show(q))
    else:
        print(curve.point_to_sides(args.n, p))
    return 0


def cmd_select(args) -> int:
    with open(args.gens) as fh:
        groups = table_io.parse_generators(fh.read())
    records = []
    for N in sorted(groups):
        pts = tuple(curve.make_point(N, x, y) for x, y in groups[N])
        sides = curve.min_height_select(N, curve.GeneratorSet(N, pts), args.kmax)
        records.append(table_io.record_from_sides(N, sides.alpha, sides.beta))
    _out(args, table_io.emit_table(records))
    return 0


def cmd_validate(args) -> int:
    bad = 0
    for r in table_io.read_table(args.table):
        report = table_io.validate_record(r)
        if not report.ok:
            bad += 1
            print(f"n={r.n}: {', '.join(report.failures)}")
    print(f"{bad} invalid row(s)", file=sys.stderr)
    return 1 if bad else 0


def cmd_diff(args) -> int:
    for d in table_io.diff_tables(table_io.read_table(args.old), table_io.read_table(args.new)):
        tag = "improved" if d.improved else "worse"
        print(f"{d.n}\t{d.old_height}\t{d.new_height}\t{tag}")
    return 0


def cmd_plot(args) -> int:
    _out(args, table_io.emit_plot_data(table_io.read_table(args.table)))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="congruent", description=__doc__)
    parser.add_argument("--verbose", action="store_true", help="progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("tunnell", help="list squarefree n passing Tunnell's test")
    p.add_argument("--range", nargs=2, type=int, metavar=("A", "B"), required=True)
    p.set_defaults(func=cmd_tunnell)

    p = sub.add_parser("search", help="exhaustive minimal-height table")
    p.add_argument("--bound", type=int, default=2000, help="exclusive upper limit on P")
    p.add_argument("--paper-bound", action="store_true",
                   help=f"use bound {PAPER_BOUND} (slow; combine with --n-max)")
    p.add_argument("--n-max", type=int)
    p.add_argument("--partitions", type=int, default=1)
    p.add_argument("--out")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("pq", help="convert between sides and (P, Q)")
    p.add_argument("action", choices=["encode", "decode", "compress"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--alpha", type=_fraction)
    p.add_argument("--beta", type=_fraction)
    p.set_defaults(func=cmd_pq)

    p = sub.add_parser("curve", help="point arithmetic on y^2 = x^3 - n^2 x")
    p.add_argument("action", choices=["double", "mul", "halve", "sides"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--x", type=_fraction, required=True)
    p.add_argument("--y", type=_fraction, required=True)
    p.add_argument("--k", type=int, default=2)
    p.set_defaults(func=cmd_curve)

    p = sub.add_parser("select", help="minimal-height sides from a generator file")
    p.add_argument("--gens", required=True)
    p.add_argument("--kmax", type=int, default=10)
    p.add_argument("--out")
    p.set_defaults(func=cmd_select)

    p = sub.add_parser("validate", help="check every row of a table")
    p.add_argument("table")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("diff", help="rows whose height differs between two tables")
    p.add_argument("old")
    p.add_argument("new")
    p.set_defaults(func=cmd_diff)

    p = sub.add_parser("plot", help="n and log10(height) as TSV")
    p.add_argument("table")
    p.add_argument("--out")
    p.set_defaults(func=cmd_plot)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        stream=sys.stderr, format="%(message)s")
    if args.command == "pq" and args.action != "encode" and (args.p is None or args.q is None):
        print("error: pq decode/compress need --p and --q", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except (UsageError, table_io.ParseError, InvariantError, NotRepresentedError,
            curve.CurveError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
