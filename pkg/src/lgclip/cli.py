"""Command line: gen, clip, verify, bench, render.

Exit status: 0 success, 1 verification failure, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import contextlib
import sys

from .algorithms import CLIPPERS, LINE_CAPABLE, get_clipper
from .geom import GeometryError

EXIT_OK, EXIT_VERIFY, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _int_list(text: str) -> list:
    try:
        values = [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if not values:
        raise argparse.ArgumentTypeError("empty list")
    return values


def _pct_list(text: str) -> list:
    out = []
    for v in text.split(","):
        v = v.strip()
        if v in ("any", "none", ""):
            out.append(None)
            continue
        try:
            out.append(float(v))
        except ValueError:
            raise argparse.ArgumentTypeError(f"bad hit percentage {v!r}")
    return out


@contextlib.contextmanager
def _output(path):
    if path in (None, "-"):
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8") as fh:
            yield fh


def _load(path):
    from .fileio import read_instance
    if path == "-":
        return read_instance(sys.stdin)
    with open(path, encoding="utf-8") as fh:
        return read_instance(fh)


def cmd_gen(args) -> int:
    from .datagen import GenConfig, gen_instance
    from .fileio import write_instance
    try:
        cfg = GenConfig(n=args.n, count=args.segments, seed=args.seed, r_poly=args.r_poly,
                        r_points=args.r_points, target_hit_pct=args.hit_pct,
                        rotation=args.rotation)
    except ValueError as exc:
        raise UsageError(str(exc))
    inst = gen_instance(cfg)
    with _output(args.out) as fh:
        write_instance(inst, fh)
    info = sys.stderr if args.out in (None, "-") else sys.stdout
    print(f"n={cfg.n} segments={cfg.count} seed={cfg.seed} rng=pcg64 r_poly={cfg.r_poly} "
          f"r_points={cfg.r_points} rotation={inst.meta['rotation']} "
          f"hit_pct={inst.meta['hit_pct']}", file=info)
    return EXIT_OK


def cmd_clip(args) -> int:
    from .fileio import write_results
    if args.mode == "line" and args.algo not in LINE_CAPABLE:
        raise UsageError(f"--algo {args.algo} clips segments only; use --mode segment")
    inst = _load(args.instance)
    clip = get_clipper(args.algo)
    results = [clip(inst.poly, a, b, args.mode) for a, b in inst.segments]
    with _output(args.out) as fh:
        write_results(fh, inst.segments, results)
    return EXIT_OK


def cmd_verify(args) -> int:
    from .verify import run_verify
    try:
        report = run_verify(args.trials, args.seed, args.n_min, args.n_max)
    except ValueError as exc:
        raise UsageError(str(exc))
    hard = report.hard_failures
    soft = len(report.disagreements) - len(hard)
    print(f"trials={report.trials} checks={report.checks} seed={args.seed} "
          f"n=[{args.n_min},{args.n_max}] degenerate_trials={report.degenerate_trials}")
    print(f"disagreements={len(hard)} (degenerate-band disagreements={soft})")
    for d in report.disagreements[:args.max_report]:
        print("  " + d.reproducer())
    if len(report.disagreements) > args.max_report:
        print(f"  ... {len(report.disagreements) - args.max_report} more")
    return EXIT_OK if report.ok else EXIT_VERIFY


def cmd_bench(args) -> int:
    from .bench import BenchError, run_bench, to_csv, to_markdown
    try:
        report = run_bench(args.n_list, args.segments, args.hit_pct_list, args.seed,
                           args.mode, args.reps, args.warmup)
    except (BenchError, ValueError) as exc:
        raise UsageError(str(exc))
    with _output(args.out) as fh:
        fh.write(to_csv(report) if args.report == "csv" else to_markdown(report))
    if args.figure:
        from .plotting import plot_speedups
        plot_speedups(report, args.figure)
    return EXIT_OK


def cmd_render(args) -> int:
    from .fileio import parse_results
    from .render import render_svg
    inst = _load(args.instance)
    if args.results:
        with open(args.results, encoding="utf-8") as fh:
            results = parse_results(fh.read())
        if len(results) != len(inst.segments):
            raise UsageError(f"{len(results)} results for {len(inst.segments)} segments")
    else:
        clip = get_clipper(args.algo)
        results = [clip(inst.poly, a, b, "segment") for a, b in inst.segments]
    with _output(args.out) as fh:
        fh.write(render_svg(inst.poly, inst.segments, results, args.size))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="lgclip", description="Convex-window line and segment clipping.")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate a seeded instance file")
    g.add_argument("--n", type=int, required=True, help="window vertex count (>= 3)")
    g.add_argument("--segments", type=int, default=1000, help="number of segments")
    g.add_argument("--seed", type=int, default=0, help="unsigned 64-bit seed")
    g.add_argument("--hit-pct", type=float, default=None,
                   help="exact percentage of segments that hit the window")
    g.add_argument("--r-poly", type=float, default=0.5, help="window circumradius")
    g.add_argument("--r-points", type=float, default=1.0, help="endpoint disc radius")
    g.add_argument("--rotation", type=float, default=None,
                   help="window rotation in radians (default: seeded random)")
    g.add_argument("--out", default=None, help="output path (default stdout)")
    g.set_defaults(func=cmd_gen)

    c = sub.add_parser("clip", help="clip every segment of an instance")
    c.add_argument("instance", help="instance file, or - for stdin")
    c.add_argument("--algo", choices=sorted(CLIPPERS), default="skala")
    c.add_argument("--mode", choices=("segment", "line"), default="segment")
    c.add_argument("--out", default=None, help="result file (default stdout)")
    c.set_defaults(func=cmd_clip)

    v = sub.add_parser("verify", help="differential fuzzing against the oracle")
    v.add_argument("--trials", type=int, default=1000)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--n-min", type=int, default=3)
    v.add_argument("--n-max", type=int, default=100)
    v.add_argument("--max-report", type=int, default=20,
                   help="print at most this many reproducer lines")
    v.set_defaults(func=cmd_verify)

    b = sub.add_parser("bench", help="time and count the clippers")
    b.add_argument("--n-list", type=_int_list, default=[10, 30, 50, 100])
    b.add_argument("--segments", type=int, default=1000)
    b.add_argument("--hit-pct-list", type=_pct_list, default=[None],
                   help="comma-separated percentages, 'any' for unconstrained")
    b.add_argument("--seed", type=int, default=1)
    b.add_argument("--mode", choices=("time", "ops", "both"), default="time")
    b.add_argument("--report", choices=("csv", "md"), default="csv")
    b.add_argument("--reps", type=int, default=7, help="timed repetitions (median)")
    b.add_argument("--warmup", type=int, default=5, help="untimed warm-up passes")
    b.add_argument("--out", default=None, help="report path (default stdout)")
    b.add_argument("--figure", default=None, help="also save a speed-up plot here")
    b.set_defaults(func=cmd_bench)

    r = sub.add_parser("render", help="draw an instance as SVG")
    r.add_argument("instance")
    r.add_argument("--results", default=None, help="result file to highlight")
    r.add_argument("--algo", choices=sorted(CLIPPERS), default="skala",
                   help="clipper used when no result file is given")
    r.add_argument("--size", type=int, default=600)
    r.add_argument("--out", default=None)
    r.set_defaults(func=cmd_render)
    return p


def main(argv=None) -> int:
    from .fileio import FormatError
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.error(str(exc))
    except (FormatError, GeometryError, OSError) as exc:
        print(f"lgclip {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:  # e.g. infeasible hit target
        print(f"lgclip {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
