"""Command-line interface.

Subcommands: classify, sweep, sample, census, render, validate, emit-poly.
Exit codes: 0 success, 2 malformed input, 3 violated invariant, 4 budget
exceeded.  All outputs are deterministic given inputs, flags and seed;
worker count never changes output bytes.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .builtins import builtin
from .classify import Classifier
from .errors import (
    BudgetExceeded,
    InvariantViolation,
    ParseError,
    TcurvesError,
)
from .flips import enumerate_unimodular
from .io import (
    read_signs,
    read_triangulation,
    write_report,
    write_triangulation,
)
from .lifting import delaunay_lifting
from .oracle import oracle_classify
from .polynomial import emit_polynomial, format_polynomial
from .render import RenderOptions, render_svg
from .sweep import SweepRange, sample, sweep


def _add_input_args(p: argparse.ArgumentParser):
    p.add_argument("triangulation", nargs="?", help="triangulation JSON file")
    p.add_argument("--builtin", help="use a builtin triangulation instead of a file")
    p.add_argument(
        "--skip-validation",
        action="store_true",
        help="do not require unimodularity (the classification itself never needs it)",
    )


def _load_triangulation(args):
    if (args.triangulation is None) == (args.builtin is None):
        raise ParseError("provide a triangulation file or --builtin, not both")
    if args.builtin:
        return builtin(args.builtin)
    return read_triangulation(
        args.triangulation, require_unimodular=not args.skip_validation
    )


def _cmd_classify(args) -> int:
    T = _load_triangulation(args)
    sigma = read_signs(T.degree, args.signs)
    result = Classifier(T).classify(sigma)
    if args.json:
        print(json.dumps(result.to_dict(), sort_keys=True))
    else:
        print(result.scheme)
        print(f"ovals: {result.oval_count}")
        print(f"pseudoline: {'yes' if result.has_pseudoline else 'no'}")
    return 0


def _print_summary(report, elapsed: float):
    rate = report.total_classified / elapsed if elapsed > 0 else float("inf")
    print(f"classified: {report.total_classified}")
    print(f"distinct schemes: {report.distinct_schemes()}")
    print(f"max ovals: {report.max_ovals()}")
    print(f"wall time: {elapsed:.2f} s ({rate:,.0f}/s)")


def _cmd_sweep(args) -> int:
    T = _load_triangulation(args)
    rng = None
    if args.start is not None or args.end is not None:
        if args.start is None or args.end is None:
            raise ParseError("--start and --end must be given together")
        rng = SweepRange(args.start, args.end)
    t0 = time.perf_counter()
    report = sweep(
        T,
        rng,
        workers=args.workers,
        raw_space=args.raw_sign_space,
        chunk_size=args.chunk_size,
    )
    elapsed = time.perf_counter() - t0
    write_report(report, args.output, args.histogram)
    _print_summary(report, elapsed)
    return 0


def _cmd_sample(args) -> int:
    T = _load_triangulation(args)
    t0 = time.perf_counter()
    report = sample(
        T, args.n, args.seed, workers=args.workers, chunk_size=args.chunk_size
    )
    elapsed = time.perf_counter() - t0
    write_report(report, args.output, args.histogram)
    _print_summary(report, elapsed)
    return 0


def _cmd_census(args) -> int:
    result = enumerate_unimodular(
        args.degree, filter_regular=args.regular_only, long_run=args.long_run
    )
    print(result.summary())
    return 0


def _cmd_render(args) -> int:
    T = _load_triangulation(args)
    sigma = read_signs(T.degree, args.signs)
    options = RenderOptions(
        quadrant_only=args.quadrant,
        show_signs=not args.no_signs,
        show_curve=not args.no_curve,
    )
    svg = render_svg(T, sigma, options)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(svg)
    else:
        sys.stdout.write(svg)
    return 0


def _cmd_validate(args) -> int:
    T = _load_triangulation(args)
    sigma = read_signs(T.degree, args.signs)
    fast = Classifier(T).classify(sigma)
    slow = oracle_classify(T, sigma)
    agree = fast == slow
    print(f"classify:        {fast.scheme}")
    print(f"oracle_classify: {slow.scheme}")
    print("AGREE" if agree else "MISMATCH")
    if not agree:
        raise InvariantViolation(
            f"classifier disagreement: {fast.to_dict()} vs {slow.to_dict()}"
        )
    return 0


def _load_lifting(d: int, spec: str | None) -> dict:
    from .lattice import lattice_points, num_points

    if spec is None or spec == "delaunay":
        return delaunay_lifting(d)
    if spec == "zero":
        return {p: 0 for p in lattice_points(d)}
    with open(spec) as fh:
        try:
            raw = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid lifting JSON in {spec}: {exc}") from None
    values = raw["values"] if isinstance(raw, dict) else raw
    if len(values) != num_points(d):
        raise ParseError(
            f"lifting needs {num_points(d)} values, got {len(values)}"
        )
    return {p: int(v) for p, v in zip(lattice_points(d), values)}


def _cmd_emit_poly(args) -> int:
    T = _load_triangulation(args)
    sigma = read_signs(T.degree, args.signs)
    lifting = _load_lifting(T.degree, args.lifting)
    terms = emit_polynomial(T, sigma, lifting)
    if args.json:
        print(json.dumps([list(t) for t in terms]))
    else:
        print(format_polynomial(terms))
    return 0


def _cmd_export_builtin(args) -> int:
    write_triangulation(builtin(args.name), args.output)
    print(args.output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tcurves",
        description="Real schemes of combinatorially patchworked plane curves",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="print the real scheme of one patchwork")
    _add_input_args(p)
    p.add_argument("signs", help="sign bitstring in canonical point order")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.set_defaults(fn=_cmd_classify)

    p = sub.add_parser("sweep", help="classify a range of sign representatives")
    _add_input_args(p)
    p.add_argument("--start", type=int, help="first representative index")
    p.add_argument("--end", type=int, help="one past the last representative index")
    p.add_argument("--raw-sign-space", action="store_true",
                   help="sweep all 2^|A| sign vectors instead of representatives")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--chunk-size", type=int, default=1 << 16)
    p.add_argument("--output", help="JSONL scheme report path")
    p.add_argument("--histogram", help="CSV oval histogram path")
    p.set_defaults(fn=_cmd_sweep)

    p = sub.add_parser("sample", help="classify seeded uniform sign draws")
    _add_input_args(p)
    p.add_argument("-n", type=int, required=True, help="number of draws")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--chunk-size", type=int, default=1 << 16)
    p.add_argument("--output", help="JSONL scheme report path")
    p.add_argument("--histogram", help="CSV oval histogram path")
    p.set_defaults(fn=_cmd_sample)

    p = sub.add_parser("census", help="count triangulation orbits by flip search")
    p.add_argument("degree", type=int)
    p.add_argument("--regular-only", action="store_true",
                   help="keep only regular triangulations")
    p.add_argument("--long-run", action="store_true",
                   help="allow the degree-5 census")
    p.set_defaults(fn=_cmd_census)

    p = sub.add_parser("render", help="draw a patchwork as SVG")
    _add_input_args(p)
    p.add_argument("signs")
    p.add_argument("--output", help="SVG path (default: stdout)")
    p.add_argument("--quadrant", action="store_true",
                   help="draw only the first quadrant")
    p.add_argument("--no-signs", action="store_true")
    p.add_argument("--no-curve", action="store_true")
    p.set_defaults(fn=_cmd_render)

    p = sub.add_parser("validate",
                       help="run both classifiers and report agreement")
    _add_input_args(p)
    p.add_argument("signs")
    p.set_defaults(fn=_cmd_validate)

    p = sub.add_parser("emit-poly", help="print the patchwork polynomial terms")
    _add_input_args(p)
    p.add_argument("signs")
    p.add_argument(
        "--lifting",
        help="'delaunay' (default), 'zero', or a JSON file of lifting values "
        "in canonical point order",
    )
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_emit_poly)

    p = sub.add_parser("export-builtin",
                       help="write a builtin triangulation to a JSON file")
    p.add_argument("name")
    p.add_argument("output")
    p.set_defaults(fn=_cmd_export_builtin)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except InvariantViolation as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except (TcurvesError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
