"""Command-line front end: ``yfgraph {level,count,ftable,measure,concentrate}``.

Exit codes: 0 success, 2 usage or parse error, 3 precondition violation,
4 internal invariant breach.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from decimal import Decimal, localcontext
from fractions import Fraction

from . import __version__
from .boundary import (
    BudgetExceeded,
    EnclosureError,
    ToleranceError,
    classify_level,
    concentration_series,
    is_positive_boundary,
)
from .infinite import Positivity, SpecError, parse_infinite
from .intervals import IntervalValue, fraction_str
from .paths import (
    InfeasibleError,
    IntegralityError,
    PreconditionError,
    d_bruteforce,
    d_closed,
    d_to_empty,
    f_table,
)
from .words import Word, WordError, enumerate_level

SCHEMA = "yfgraph/1"

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_PRECONDITION = 3
EXIT_INTERNAL = 4


class UsageError(Exception):
    pass


def _fraction_arg(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}")


def _word_arg(text: str) -> Word:
    try:
        return Word.parse(text)
    except WordError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _nonneg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return value


class Formatter:
    def __init__(self, digits=None):
        self.digits = digits

    def q(self, value) -> str:
        if self.digits is None:
            return fraction_str(value)
        value = Fraction(value)
        with localcontext() as ctx:
            ctx.prec = self.digits
            out = Decimal(value.numerator) / Decimal(value.denominator)
        return str(out)

    def interval(self, iv: IntervalValue):
        return {"lo": self.q(iv.lo), "hi": self.q(iv.hi)}

    def interval_text(self, iv: IntervalValue) -> str:
        if iv.is_exact:
            return self.q(iv.lo)
        return f"[{self.q(iv.lo)}, {self.q(iv.hi)}]"


def _emit(out, fmt: str, command: str, header, rows, meta=None, json_rows=None):
    """Write rows as an aligned table, CSV, or a JSON document."""
    if fmt == "json":
        doc = {"schema": SCHEMA, "command": command}
        if meta:
            doc.update(meta)
        doc["rows"] = json_rows if json_rows is not None else [dict(zip(header, r)) for r in rows]
        out.write(json.dumps(doc, indent=2) + "\n")
        return
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
        out.write(buf.getvalue())
        return
    cells = [list(map(str, header))] + [[str(c) for c in r] for r in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(header))]
    for row in cells:
        out.write("  ".join(c.ljust(wd) for c, wd in zip(row, widths)).rstrip() + "\n")
    if meta:
        for key, value in meta.items():
            out.write(f"# {key}: {value}\n")


def cmd_level(args, out, err):
    header = ["word", "rank", "len", "twos", "d"]
    rows = [
        [v.label, v.rank, len(v), v.twos, str(d_to_empty(v))]
        for v in enumerate_level(args.n)
    ]
    _emit(out, args.format, "level", header, rows, meta={"n": args.n, "size": len(rows)})
    return EXIT_OK


def cmd_count(args, out, err):
    x, y = args.x, args.y
    results = []
    timings = []
    methods = ["brute", "closed"] if args.method == "both" else [args.method]
    for method in methods:
        start = time.perf_counter()
        if y.rank < x.rank:
            value = 0
        elif method == "brute":
            value = d_bruteforce(x, y)
        else:
            value = d_closed(x, y)
        timings.append((method, time.perf_counter() - start))
        results.append((method, value))
    header = ["x", "y", "method", "count"]
    rows = [[x.label, y.label, m, str(v)] for m, v in results]
    meta = None
    status = EXIT_OK
    if len(results) == 2:
        equal = results[0][1] == results[1][1]
        meta = {"equal": equal}
        for method, seconds in timings:
            err.write(f"{method}: {seconds:.6f}s\n")
        if not equal:
            err.write("error: brute force and closed form disagree\n")
            status = EXIT_INTERNAL
    _emit(out, args.format, "count", header, rows, meta=meta)
    return status


def cmd_ftable(args, out, err):
    x = args.x
    fmt = Formatter(args.approx_digits)
    table = f_table(x)
    zs = range(len(table)) if args.z is None else [args.z]
    if args.z is not None and not 0 <= args.z < len(table):
        raise PreconditionError(f"z must lie in 0..{len(x)}")
    header = ["z"] + [f"y={y}" for y in range(x.rank + 1)]
    rows = [[z] + [fmt.q(v) for v in table[z]] for z in zs]
    json_rows = [{"z": z, "values": [fmt.q(v) for v in table[z]]} for z in zs]
    _emit(out, args.format, "ftable", header, rows, meta={"x": x.label}, json_rows=json_rows)
    return EXIT_OK


def _flag(value):
    if value is None:
        return ""
    return "1" if value else "0"


def cmd_measure(args, out, err):
    w = parse_infinite(args.w)
    fmt = Formatter(args.approx_digits)
    m = None if args.limit else args.m
    eps = args.eps
    refusal = None
    if eps is not None and is_positive_boundary(w) is not Positivity.YES:
        refusal = f"{w.spec()} is not a positive boundary word; R-classification skipped"
        eps = None
    report = classify_level(w, args.n, args.delta, args.l, eps, args.tol, m=m)
    header = ["word", "mu_lo", "mu_hi", "h_prime", "pi", "in_P", "in_Q", "in_R"]
    rows = [
        [
            r.word.label,
            fmt.q(r.mu.lo),
            fmt.q(r.mu.hi),
            r.h_prime,
            fmt.q(r.pi),
            _flag(r.in_P),
            _flag(r.in_Q),
            _flag(r.in_R),
        ]
        for r in report.rows
    ]
    meta = {
        "w": w.spec(),
        "n": args.n,
        "mode": "limit" if m is None else f"m={m}",
        "delta": fraction_str(report.delta),
        "l": report.l,
        "eps": None if eps is None else fraction_str(eps),
        "bound": f"{report.bound_value:.12g}",
    }
    if report.pi_w is not None:
        meta["pi_w"] = fmt.interval(report.pi_w) if args.format == "json" else fmt.interval_text(report.pi_w)
    for name, iv in report.masses.items():
        meta[f"mass_{name}"] = fmt.interval(iv) if args.format == "json" else fmt.interval_text(iv)
    json_rows = [
        {
            "word": r.word.label,
            "mu": fmt.interval(r.mu),
            "h_prime": r.h_prime,
            "pi": fmt.q(r.pi),
            "in_P": r.in_P,
            "in_Q": r.in_Q,
            "in_R": r.in_R,
        }
        for r in report.rows
    ]
    if args.format == "csv":
        meta = None
    _emit(out, args.format, "measure", header, rows, meta=meta, json_rows=json_rows)
    if refusal:
        err.write(f"error: {refusal}\n")
        return EXIT_PRECONDITION
    return EXIT_OK


def cmd_concentrate(args, out, err):
    if args.n_to < args.n_from:
        raise UsageError("--n-to must not be smaller than --n-from")
    w = parse_infinite(args.w)
    if is_positive_boundary(w) is not Positivity.YES:
        raise PreconditionError(f"{w.spec()} is not a positive boundary word")
    fmt = Formatter(args.approx_digits)
    status = EXIT_OK
    try:
        series = concentration_series(
            w,
            args.delta,
            args.n_from,
            args.n_to,
            tol=args.tol,
            approx=args.approx,
            budget_seconds=args.budget,
        )
    except BudgetExceeded as exc:
        series = exc.partial
        err.write(f"error: {exc}\n")
        status = EXIT_PRECONDITION
    header = ["n", "pbar_mass_lo", "pbar_mass_hi", "bound"]
    rows = []
    json_rows = []
    for p in series:
        if p.approx is not None:
            lo = hi = repr(p.approx)
        else:
            lo, hi = fmt.q(p.pbar_mass.lo), fmt.q(p.pbar_mass.hi)
        rows.append([p.n, lo, hi, f"{p.bound:.12g}"])
        json_rows.append(
            {"n": p.n, "pbar_mass": {"lo": lo, "hi": hi}, "bound": f"{p.bound:.12g}"}
        )
    meta = {"w": w.spec(), "delta": fraction_str(Fraction(args.delta))}
    if args.format == "csv":
        meta = None
    _emit(out, args.format, "concentrate", header, rows, meta=meta, json_rows=json_rows)
    return status


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="yfgraph",
        description="Exact path counts and boundary measures on the Young-Fibonacci graph.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=["table", "csv", "json"],
        default=None,
        help="output format (default: table; csv for concentrate)",
    )
    common.add_argument(
        "--approx-digits",
        type=int,
        default=None,
        metavar="D",
        help="print rationals as decimals with D significant digits",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("level", parents=[common], help="list the words of rank n")
    p.add_argument("n", type=_nonneg)
    p.set_defaults(func=cmd_level)

    p = sub.add_parser("count", parents=[common], help="count down-paths from y to x")
    p.add_argument("x", type=_word_arg, help="lower word ('e' for empty)")
    p.add_argument("y", type=_word_arg, help="upper word")
    p.add_argument("--method", choices=["brute", "closed", "both"], default="closed")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("ftable", parents=[common], help="grid of f(x, y, z), rows z, columns y")
    p.add_argument("x", type=_word_arg)
    p.add_argument("--z", type=_nonneg, default=None, help="only this row")
    p.set_defaults(func=cmd_ftable)

    p = sub.add_parser("measure", parents=[common], help="boundary measure on level n")
    p.add_argument("w", help="ones | finite:<word> | const:<c> | geometric:<b0> | explicit:<b0,...;tail=...>")
    p.add_argument("n", type=_nonneg)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--m", type=_nonneg, default=None, help="finite stage mu_w(v, m)")
    mode.add_argument("--limit", action="store_true", help="limit measure (default)")
    p.add_argument("--tol", type=_fraction_arg, default=Fraction(1, 10**12))
    p.add_argument("--delta", type=_fraction_arg, default=Fraction(1, 2))
    p.add_argument("--l", type=_nonneg, default=0)
    p.add_argument("--eps", type=_fraction_arg, default=Fraction(1, 2))
    p.set_defaults(func=cmd_measure)

    p = sub.add_parser("concentrate", parents=[common], help="complement-of-P mass per level")
    p.add_argument("w")
    p.add_argument("--delta", type=_fraction_arg, default=Fraction(1, 2))
    p.add_argument("--n-from", type=_nonneg, required=True)
    p.add_argument("--n-to", type=_nonneg, required=True)
    p.add_argument("--tol", type=_fraction_arg, default=Fraction(1, 10**12))
    p.add_argument("--approx", action="store_true", help="floating-point evaluation")
    p.add_argument("--budget", type=float, default=None, metavar="SECONDS")
    p.set_defaults(func=cmd_concentrate)
    return parser


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.format is None:
            args.format = "csv" if args.command == "concentrate" else "table"
        if args.command == "measure" and args.m is None:
            args.limit = True
        return args.func(args, out, err)
    except (UsageError, WordError, SpecError) as exc:
        err.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    except (PreconditionError, InfeasibleError, ToleranceError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_PRECONDITION
    except (IntegralityError, EnclosureError) as exc:
        err.write(f"internal error: {exc}\n")
        return EXIT_INTERNAL


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
