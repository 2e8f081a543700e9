"""Command-line front end: ``spincat {bipartite,tripartite,figure,verify}``.

Exit codes: 0 success, 1 usage error, 2 numerical verification failure.
"""

from __future__ import annotations

import argparse
import sys

from . import verify
from .errors import SpinCatError
from .report import DEFAULT_STEPS, FIGURES, MEASURES, SweepSpec, emit, figure, run_sweep
from .spin import SplitScheme

EXIT_USAGE = 1
EXIT_VERIFY = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _add_output(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", default="-", help="output file (default: stdout)")


def _add_sweep(p: argparse.ArgumentParser, default_measures: str) -> None:
    p.add_argument("--j", required=True, help="total spin, e.g. 3/2 or 2")
    p.add_argument("--m", type=int, choices=(0, 1), default=0, help="parity: 0 even, 1 odd")
    p.add_argument("--scheme", default="all", help="comma-separated part spins, or 'all'")
    p.add_argument("--p-start", type=float, default=0.0)
    p.add_argument("--p-end", type=float, default=1.0)
    p.add_argument("--steps", type=int, default=DEFAULT_STEPS)
    p.add_argument(
        "--measures",
        default=default_measures,
        help=f"comma-separated subset of {','.join(MEASURES)} (empty for none)",
    )
    _add_output(p)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="spincat", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    _add_sweep(sub.add_parser("bipartite", help="sweep p over two-part splits"), "C_pure,E_pure")
    _add_sweep(sub.add_parser("tripartite", help="sweep p over three-part splits"), "E_pair,E_pure,total")
    fig = sub.add_parser("figure", help="emit the data behind one figure preset")
    fig.add_argument("id", choices=sorted(FIGURES, key=lambda k: int(k[3:])))
    fig.add_argument("--steps", type=int, default=DEFAULT_STEPS)
    _add_output(fig)
    ver = sub.add_parser("verify", help="check closed forms against the matrix oracles")
    ver.add_argument("--discord-samples", type=int, default=100)
    return parser


def _write(report, args) -> None:
    text = emit(report, args.format, None if args.out == "-" else args.out)
    if args.out == "-":
        sys.stdout.write(text)


def _sweep(args, arity: int):
    schemes = "all" if args.scheme == "all" else (SplitScheme.parse(args.scheme),)
    if schemes != "all" and len(schemes[0]) != arity:
        raise SpinCatError(f"--scheme must have {arity} parts for this subcommand")
    measures = tuple(m.strip() for m in args.measures.split(",") if m.strip())
    spec = SweepSpec(
        j=args.j,
        m=args.m,
        schemes=schemes,
        p_start=args.p_start,
        p_end=args.p_end,
        steps=args.steps,
        measures=measures,
        arity=arity,
    )
    return run_sweep(spec)


def _verify(args) -> int:
    results = verify.run(discord_samples=args.discord_samples)
    for name, r in results.items():
        status = "ok" if r["max_residual"] <= r["tolerance"] else "FAIL"
        print(f"{name:18s} max residual {r['max_residual']:.3e}  tol {r['tolerance']:.0e}  "
              f"{r['seconds']:.2f}s  {status}")
    return 0 if verify.passed(results) else EXIT_VERIFY


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "verify":
            return _verify(args)
        if args.command == "figure":
            report = figure(args.id, steps=args.steps)
        else:
            report = _sweep(args, 2 if args.command == "bipartite" else 3)
        _write(report, args)
    except (SpinCatError, OSError) as exc:
        print(f"spincat: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return 0


if __name__ == "__main__":
    sys.exit(main())
