"""Command line: ``fracpower {build,omega,chi,color,scan,corpus} ...``.

Exit codes: 0 success, 1 usage or input error, 2 verification failure.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import colorbuild as cb
from .corpus import connected_graphs
from .formulas import omega_fractional
from .graph import Graph, max_degree
from .io import ParseError, parse_graph, to_dot, to_edgelist, to_graph6
from .oracles import OracleUnknown, chi_exact, exact_coloring, max_clique_exact
from .power import fractional_power
from .scan import DEFAULT_TIME_LIMIT, scan_conjecture, write_report

EXIT_OK, EXIT_USAGE, EXIT_VERIFY = 0, 1, 2

METHODS = {
    "subdivision": lambda g, m, n: cb.color_subdivision(g, n) if m == 1 else _bad_method("subdivision", "m=1"),
    "two-over-n": lambda g, m, n: cb.color_2_n(g, n) if m == 2 else _bad_method("two-over-n", "m=2"),
    "m-over-m+1": lambda g, m, n: cb.color_m_m1(g, m) if n == m + 1 else _bad_method("m-over-m+1", "n=m+1"),
    "lifted-m-over-m+1": lambda g, m, n: (
        cb.color_m_k_m1(g, m, n // (m + 1)) if n % (m + 1) == 0 else _bad_method("lifted-m-over-m+1", "(m+1) | n")),
    "path-cycle-power": lambda g, m, n: cb.color_low_degree(g, m, n),
}


class UsageError(Exception):
    pass


def _bad_method(name: str, need: str):
    raise UsageError(f"method {name} needs {need}")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _read_graph(path: str, fmt: str | None) -> Graph:
    if fmt is None:
        fmt = "graph6" if path.endswith((".g6", ".graph6")) else "edgelist"
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read(), fmt)


def _write(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _add_graph_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--input", required=True)
    p.add_argument("--format", choices=["edgelist", "graph6"], default=None)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="fracpower", description="Fractional powers of graphs and their colorings.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    p = sub.add_parser("build", help="materialize G^(m/n)")
    _add_graph_args(p)
    p.add_argument("--out")
    p.add_argument("--emit", choices=["edgelist", "dot"], default="edgelist")

    p = sub.add_parser("omega", help="clique number formula, optionally checked exactly")
    _add_graph_args(p)
    p.add_argument("--verify", action="store_true")

    p = sub.add_parser("color", help="color G^(m/n) with the best construction")
    _add_graph_args(p)
    p.add_argument("--method", choices=["auto", "exact", *METHODS], default="auto")
    p.add_argument("--verify", action="store_true")
    p.add_argument("--time-limit", type=float, default=None)
    p.add_argument("--out")

    p = sub.add_parser("chi", help="exact chromatic number of G^(m/n)")
    _add_graph_args(p)
    p.add_argument("--time-limit", type=float, default=None)

    p = sub.add_parser("scan", help="search a graph6 corpus for chi > omega")
    p.add_argument("--corpus", required=True)
    p.add_argument("--max-m", type=int, required=True)
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--time-limit", type=float, default=DEFAULT_TIME_LIMIT)
    p.add_argument("--report", required=True)
    p.add_argument("--csv")

    p = sub.add_parser("corpus", help="write all connected graphs in an order range as graph6")
    p.add_argument("--min-order", type=int, default=1)
    p.add_argument("--max-order", type=int, required=True)
    p.add_argument("--min-delta", type=int, default=0)
    p.add_argument("--out")
    return parser


def _cmd_build(args) -> int:
    g = _read_graph(args.input, args.format)
    pg = fractional_power(g, args.m, args.n)
    names = pg.label_strings()
    if args.emit == "dot":
        _write(to_dot(pg.materialized, names, graph_name=f"G_{args.m}_{args.n}"), args.out)
    else:
        _write(to_edgelist(pg.materialized, names), args.out)
    return EXIT_OK


def _cmd_omega(args) -> int:
    g = _read_graph(args.input, args.format)
    try:
        omega = omega_fractional(max_degree(g), args.m, args.n)
    except ValueError as exc:
        raise UsageError(str(exc))
    print(omega)
    if args.verify:
        exact = max_clique_exact(fractional_power(g, args.m, args.n).materialized)
        agree = exact == omega
        print(f"formula {omega} exact {exact} {'agree' if agree else 'DISAGREE'}")
        if not agree:
            return EXIT_VERIFY
    return EXIT_OK


def _cmd_color(args) -> int:
    g = _read_graph(args.input, args.format)
    m, n = args.m, args.n
    if args.method == "auto":
        coloring, tag = cb.color_fractional(g, m, n, time_limit=args.time_limit)
    elif args.method == "exact":
        pg = fractional_power(g, m, n)
        colors = exact_coloring(pg.materialized, args.time_limit)
        coloring = cb.Coloring(m=m, n=n, assignment=dict(zip(pg.names, colors)), palette=frozenset(colors))
        tag = cb.FALLBACK
    else:
        coloring, tag = METHODS[args.method](g, m, n), args.method
    print(f"method {tag}")
    print(f"colors {coloring.palette_size}")
    status = EXIT_OK
    pg = fractional_power(g, m, n)
    if args.verify:
        bad = cb.verify(g, coloring, pg)
        if bad is None:
            print("proper")
        else:
            print(f"IMPROPER {bad[0].name()} {bad[1].name()}")
            status = EXIT_VERIFY
    if args.out:
        _write(cb.format_coloring(pg, coloring), args.out)
    return status


def _cmd_chi(args) -> int:
    g = _read_graph(args.input, args.format)
    print(chi_exact(fractional_power(g, args.m, args.n).materialized, args.time_limit))
    return EXIT_OK


def _cmd_scan(args) -> int:
    with open(args.corpus, encoding="utf-8") as fh:
        lines = fh.read().splitlines()
    records, errors = scan_conjecture(lines, args.max_m, args.max_n, time_limit=args.time_limit, jobs=args.jobs)
    params = {"corpus": os.path.basename(args.corpus), "max_m": args.max_m, "max_n": args.max_n,
              "time_limit": args.time_limit}
    csv_path = args.csv
    data = write_report(records, args.report, csv_path, errors, params)
    s = data["summary"]
    print(" ".join(f"{k}={s[k]}" for k in ("total", "pass", "fail", "skipped", "unknown")))
    for e in errors:
        print(f"parse error line {e['line']}: {e['error']}", file=sys.stderr)
    for r in records:
        if r.status == "fail":
            print(f"FAIL {r.graph} m={r.m} n={r.n}: {r.note}")
    return EXIT_VERIFY if s["fail"] else EXIT_OK


def _cmd_corpus(args) -> int:
    graphs = connected_graphs(args.min_order, args.max_order, args.min_delta)
    _write("".join(to_graph6(g) + "\n" for g in graphs), args.out)
    return EXIT_OK


COMMANDS = {"build": _cmd_build, "omega": _cmd_omega, "color": _cmd_color, "chi": _cmd_chi,
            "scan": _cmd_scan, "corpus": _cmd_corpus}


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"fracpower: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ParseError, OSError, ValueError) as exc:
        print(f"fracpower: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except cb.ConstructionError as exc:
        print(f"fracpower: construction failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except OracleUnknown as exc:
        print(f"fracpower: unknown ({exc.reason})", file=sys.stderr)
        return EXIT_VERIFY


if __name__ == "__main__":
    sys.exit(main())
