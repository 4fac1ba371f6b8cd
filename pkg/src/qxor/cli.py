"""Command-line entry point.

Subcommands: gen, solve, sweep, theory, compare, plot. All are thin
adapters over the library modules; the only logic here is flag parsing,
file I/O and exit-code mapping.

Exit codes: 0 success, 1 usage error, 2 input/parse error, 3 capability
error. ``solve`` follows the solver convention instead: 10 when every
file is TRUE, 20 when any is FALSE.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import exp, theory
from ._kernels import backend_name
from .errors import CapabilityError, InputError, ParseError
from .gen import GenConfig, derive_seed, generate
from .model import parse as parse_instance
from .model import serialize

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INPUT = 2
EXIT_CAPABILITY = 3
EXIT_ALL_TRUE = 10
EXIT_ANY_FALSE = 20


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _add_grid_flags(p: argparse.ArgumentParser, defaults: tuple | None = None) -> None:
    if defaults is None:
        p.add_argument("--c-from", type=float, required=True)
        p.add_argument("--c-to", type=float, required=True)
        p.add_argument("--c-step", type=float, required=True)
    else:
        c_from, c_to, c_step = defaults
        p.add_argument("--c-from", type=float, default=c_from)
        p.add_argument("--c-to", type=float, default=c_to)
        p.add_argument("--c-step", type=float, default=c_step)


def _build_parser() -> _Parser:
    parser = _Parser(prog="qxor", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version",
                        version=f"qxor (kernels: {backend_name})")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("gen", help="generate random instances")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--L", type=int, required=True)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--out", default=None,
                   help="output directory, or - for single-instance stdout")
    p.add_argument("out_pos", nargs="?", default=None, help=argparse.SUPPRESS)
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("solve", help="decide instance files")
    p.add_argument("--engine", choices=exp.ENGINES, default="auto")
    p.add_argument("--property", choices=exp.PROPERTIES, default="qxor")
    p.add_argument("files", nargs="+")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("sweep", help="Monte Carlo sweep over a density grid")
    p.add_argument("--property", choices=exp.PROPERTIES, required=True)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m-mode", type=exp.MMode.parse, required=True,
                   help="eq-n | const=K | ratio=R")
    _add_grid_flags(p, defaults=(0.05, 1.0, 0.05))
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--engine", choices=exp.ENGINES, default="auto")
    p.add_argument("--matched", action="store_true",
                   help="evaluate all three properties on the same instances")
    p.add_argument("--threads", type=int, default=None)
    p.add_argument("--out", default="-")
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("theory", help="tabulate a limiting curve")
    p.add_argument("--curve", choices=theory.CURVE_IDS, required=True)
    p.add_argument("--m", type=int, default=None)
    _add_grid_flags(p)
    p.add_argument("--out", default="-")
    p.set_defaults(func=_cmd_theory)

    p = sub.add_parser("compare", help="sweep CSV vs theory CSV")
    p.add_argument("--sweep", required=True)
    p.add_argument("--theory", required=True)
    p.add_argument("--out", default="-")
    p.set_defaults(func=_cmd_compare)

    p = sub.add_parser("plot", help="render sweep/theory CSVs to SVG")
    p.add_argument("--in", dest="inputs", action="append", required=True)
    p.add_argument("--out", default="-")
    p.set_defaults(func=_cmd_plot)

    return parser


def _write_text(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="") as f:
            f.write(text)


def _cmd_gen(args) -> int:
    cfg_check = GenConfig(args.m, args.n, args.L, args.a, args.e, args.seed)
    out = args.out if args.out is not None else args.out_pos
    if out is None:
        out = "-"
    if out == "-":
        if args.count != 1:
            raise _UsageError("writing to stdout needs --count 1")
        inst = generate(GenConfig(cfg_check.m, cfg_check.n, cfg_check.L,
                                  cfg_check.a, cfg_check.e,
                                  derive_seed(args.seed, "gen", 0)))
        sys.stdout.write(serialize(inst))
        return EXIT_OK
    os.makedirs(out, exist_ok=True)
    for i in range(args.count):
        inst = generate(GenConfig(cfg_check.m, cfg_check.n, cfg_check.L,
                                  cfg_check.a, cfg_check.e,
                                  derive_seed(args.seed, "gen", i)))
        Path(out, f"inst-{i:03d}.qxor").write_text(serialize(inst), encoding="utf-8")
    return EXIT_OK


def _cmd_solve(args) -> int:
    all_true = True
    for path in args.files:
        try:
            text = Path(path).read_text(encoding="utf-8")
        except OSError as exc:
            raise ParseError(f"cannot read {path}: {exc}") from exc
        inst = parse_instance(text)
        engine = exp.resolve_engine(args.property, inst.a, inst.e, args.engine)
        verdict = exp._decide_props(inst, {args.property: engine})[args.property]
        print(f"{path} {'TRUE' if verdict else 'FALSE'}")
        all_true = all_true and verdict
    return EXIT_ALL_TRUE if all_true else EXIT_ANY_FALSE


def _cmd_sweep(args) -> int:
    cfg = exp.SweepConfig(
        property=args.property, a=args.a, e=args.e, n=args.n,
        m_mode=args.m_mode,
        grid=theory.DensityGrid(args.c_from, args.c_to, args.c_step),
        samples=args.samples, seed=args.seed, engine=args.engine,
        matched=args.matched,
    )
    if args.matched:
        results = exp.run_sweep_matched(cfg, threads=args.threads)
    else:
        results = exp.run_sweep(cfg, threads=args.threads)
    _write_text(args.out, exp.sweep_csv_text(cfg, results))
    return EXIT_OK


def _cmd_theory(args) -> int:
    grid = theory.DensityGrid(args.c_from, args.c_to, args.c_step)
    curve = theory.tabulate(args.curve, grid, m=args.m)
    import io

    buf = io.StringIO()
    exp.write_theory_csv(buf, curve)
    _write_text(args.out, buf.getvalue())
    return EXIT_OK


def _cmd_compare(args) -> int:
    try:
        rows = exp.read_sweep_csv(args.sweep)
        props = sorted({r["property"] for r in rows})
        if len(props) != 1:
            raise InputError(f"sweep CSV must hold one property, found {props}")
        curves = exp.read_theory_csv(args.theory)
        if len(curves) != 1:
            raise InputError(f"theory CSV must hold one curve, found {sorted(curves)}")
        report = exp.compare(exp.points_from_rows(rows), next(iter(curves.values())))
    except OSError as exc:
        raise ParseError(str(exc)) from exc
    except ParseError:
        raise
    except InputError as exc:
        raise ParseError(str(exc)) from exc
    import io

    buf = io.StringIO()
    exp.write_comparison_csv(buf, report)
    _write_text(args.out, buf.getvalue())
    return EXIT_OK


def _sniff_series(path: str) -> list[exp.Series]:
    stem = Path(path).stem
    with open(path, encoding="utf-8", newline="") as f:
        header = f.readline().strip()
    if header == ",".join(exp.SWEEP_CSV_FIELDS):
        rows = exp.read_sweep_csv(path)
        series: list[exp.Series] = []
        for prop in exp.PROPERTIES:
            pts = [(r["c"], r["p_hat"]) for r in rows if r["property"] == prop]
            if pts:
                series.append((f"{stem}:{prop}", pts))
        return series
    if header == ",".join(exp.THEORY_CSV_FIELDS):
        curves = exp.read_theory_csv(path)
        return [(f"{stem}:{cid}", list(curve.points)) for cid, curve in curves.items()]
    raise ParseError(f"{path}: unrecognized CSV header")


def _cmd_plot(args) -> int:
    series: list[exp.Series] = []
    try:
        for path in args.inputs:
            series.extend(_sniff_series(path))
        svg = exp.render_svg(series)
    except OSError as exc:
        raise ParseError(str(exc)) from exc
    except ParseError:
        raise
    except InputError as exc:
        raise ParseError(str(exc)) from exc
    _write_text(args.out, svg)
    return EXIT_OK


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"qxor: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help / --version paths
        return int(exc.code or 0)
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"qxor: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ParseError as exc:
        print(f"qxor: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except CapabilityError as exc:
        print(f"qxor: error: {exc}", file=sys.stderr)
        return EXIT_CAPABILITY
    except InputError as exc:
        print(f"qxor: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
