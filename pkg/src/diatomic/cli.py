"""diatomic: sequences, verification sweeps, plots and bijections from the shell."""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import box, fibrep, graph, oplus, sigma_binet, stern
from .cache import CacheError, TableCache
from .exact import DomainError, fib
from .suites import SUITES, run_suite


def _b_table(size):
    return [0 if v is None else v for v in oplus.b_table(size)]


# name -> (first index, largest allowed index, table builder)
SEQUENCES = {
    "stern": (0, 10**7, stern.stern_table),
    "b": (1, 10**6, _b_table),
    "r": (0, 10**7, fibrep.r_table),
    "sf": (0, 10**7, sigma_binet.s_f_table),
    "c": (1, 10**4, sigma_binet.c_sigma_table),
}

PLOT_DEPTH = {"f": 20, "qm": 16, "g": 16, "Q": 27, "graph": 16}
PLOT_MIN = {"Q": 3}


def _fmt(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _approx(x: Fraction) -> str:
    return repr(float(x))


def _open_out(path):
    if path in (None, "-"):
        return sys.stdout, False
    try:
        return open(path, "w", newline="\n", encoding="utf-8"), True
    except OSError as exc:
        raise DomainError(f"cannot write {path}: {exc.strerror}") from exc


def _write(path, text: str) -> None:
    fh, close = _open_out(path)
    try:
        fh.write(text)
    finally:
        if close:
            fh.close()


# -- subcommands -------------------------------------------------------------

def cmd_seq(args) -> int:
    if args.name not in SEQUENCES:
        raise DomainError(f"unknown sequence {args.name!r}")
    first, limit, build = SEQUENCES[args.name]
    lo, hi = args.start, args.stop
    if lo > hi:
        raise DomainError("--from must not exceed --to")
    if lo < first:
        raise DomainError(f"{args.name} starts at index {first}")
    if hi > limit:
        raise DomainError(f"range too large: {args.name} is limited to index {limit}")
    if args.cache:
        cache = TableCache(args.cache)
        values = cache.prefix(args.name, hi + 1, build)
        cache.save()
    else:
        values = build(hi + 1)
    rows = [(n, int(values[n])) for n in range(lo, hi + 1)]
    if args.format == "json":
        text = json.dumps([[n, v] for n, v in rows]) + "\n"
    else:
        text = "n,value\n" + "".join(f"{n},{v}\n" for n, v in rows)
    _write(args.out, text)
    return 0


def cmd_verify(args) -> int:
    if args.suite not in SUITES:
        raise DomainError(f"unknown suite {args.suite!r}; known: {', '.join(SUITES)}")
    res = run_suite(args.suite, args.bound, jobs=args.jobs)
    if res.ok:
        print(f"{res.name}: pass, {res.cases} cases (bound {res.bound})")
        return 0
    print(f"{res.name}: FAIL at {res.failure} after {res.cases} cases (bound {res.bound})")
    return 1


def _plot_points(target: str, depth: int):
    if target in ("f", "qm"):
        return box.sample_singular(target, depth)
    if target == "g":
        size = 1 << depth
        return [(Fraction(k, size), oplus.g(Fraction(k, size))) for k in range(size + 1)]
    if target == "Q":
        F = fib(depth)
        return [(Fraction(k, F), fibrep.q(k, depth)) for k in range(fib(depth - 1))]
    raise DomainError(f"unknown plot target {target!r}")


def cmd_plot(args) -> int:
    top = PLOT_DEPTH.get(args.target)
    if top is None:
        raise DomainError(f"unknown plot target {args.target!r}")
    low = PLOT_MIN.get(args.target, 0)
    if not low <= args.depth <= top:
        raise DomainError(f"{args.target} depth must be in {low}..{top}")
    if args.target == "graph":
        text = graph.graph_g(args.depth).to_svg(labels=args.labels)
    else:
        pts = _plot_points(args.target, args.depth)
        text = "x,y,x_approx,y_approx\n" + "".join(
            f"{_fmt(x)},{_fmt(y)},{_approx(x)},{_approx(y)}\n" for x, y in pts)
    _write(args.out, text)
    return 0


def cmd_bijection(args) -> int:
    vals = args.values
    if args.direction == "toPair":
        if len(vals) != 1:
            raise DomainError("toPair takes one index")
        pair = stern.stern_pair(vals[0]) if args.kind == "stern" else oplus.b_pair(vals[0])
        print(*pair)
    else:
        if len(vals) != 2:
            raise DomainError("toIndex takes two values")
        fn = stern.stern_index if args.kind == "stern" else oplus.b_pair_index
        print(fn(*vals))
    return 0


def cmd_conjectures(args) -> int:
    report = sigma_binet.conjecture_report(args.bound)
    _write(args.out, report.to_json() + "\n")
    return 0


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="diatomic", description=__doc__)
    p.add_argument("--cache", metavar="PATH", help="persist memo tables in this file")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("seq", help="print a range of a sequence")
    s.add_argument("name", help=", ".join(SEQUENCES))
    s.add_argument("--from", dest="start", type=int, default=None)
    s.add_argument("--to", dest="stop", type=int, required=True)
    s.add_argument("--format", choices=("csv", "json"), default="csv")
    s.add_argument("--out", default="-")
    s.set_defaults(func=cmd_seq)

    v = sub.add_parser("verify", help="run a registered property sweep")
    v.add_argument("suite", help="suite name (see 'verify list')")
    v.add_argument("--bound", type=int, default=None)
    v.add_argument("--jobs", type=int, default=1)
    v.set_defaults(func=cmd_verify)

    pl = sub.add_parser("plot", help="sample f, qm, g, Q to CSV or draw the graph as SVG")
    pl.add_argument("target", choices=tuple(PLOT_DEPTH))
    pl.add_argument("depth", nargs="?", type=int)
    pl.add_argument("--depth", dest="depth_opt", type=int)
    pl.add_argument("--out", default="-")
    pl.add_argument("--labels", action="store_true", help="label graph vertices with their values")
    pl.set_defaults(func=cmd_plot)

    b = sub.add_parser("bijection", help="index <-> pair maps for stern and oplus")
    b.add_argument("kind", choices=("stern", "oplus"))
    b.add_argument("direction", choices=("toPair", "toIndex"))
    b.add_argument("values", nargs="+", type=int)
    b.set_defaults(func=cmd_bijection)

    c = sub.add_parser("conjectures", help="sweep the open c_n conjectures, JSON report")
    c.add_argument("--bound", type=int, default=2000)
    c.add_argument("--out", default="-")
    c.set_defaults(func=cmd_conjectures)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "seq" and args.start is None:
        args.start = SEQUENCES.get(args.name, (0,))[0]
    if args.command == "plot":
        args.depth = args.depth_opt if args.depth_opt is not None else args.depth
        if args.depth is None:
            print("diatomic: error: plot needs a depth", file=sys.stderr)
            return 2
    if args.command == "verify" and args.suite == "list":
        for s in SUITES.values():
            print(f"{s.name}  (default bound {s.default_bound})  {s.description}")
        return 0
    try:
        return args.func(args)
    except (DomainError, CacheError, KeyError) as exc:
        msg = exc.args[0] if exc.args else str(exc)
        print(f"diatomic: error: {msg}", file=sys.stderr)
        return 2
