"""Command line front end.

Subcommands: `clip` segment files, `render` runs to SVG, `bench` the timing
suite to CSV, `verify` a clipper against the exact oracle.  Exit status 0 on
success, 1 on usage or input errors, 2 when verification finds a mismatch.
"""

from __future__ import annotations

import argparse
import sys

from .baselines import UnknownClipperError, get_clipper, registered_clippers
from .bench import (BenchConfig, DEFAULT_SIZES, PAPER_SCALE_SIZES, format_table,
                    run_suite, write_csv)
from .geom import (Counters, SegmentFormatError, Window, read_segments,
                   validate_window, write_segments)
from .oracle import (DEFAULT_WINDOW, GeneratorSpec, check_equivalence,
                     default_region)
from .svg import render_svg

USAGE_ERROR = 1
VERIFY_MISMATCH = 2


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors by default; 2 is reserved for
    # verification mismatches here.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(USAGE_ERROR, f"{self.prog}: error: {message}\n")


def _window_arg(text: str) -> Window:
    try:
        xl, yb, xr, yt = (float(t) for t in text.split(","))
        return validate_window(Window(xl, xr, yb, yt))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(
            f"expected xL,yB,xR,yT with xL < xR and yB < yT: {text!r} ({exc})"
        ) from None


def _sizes_arg(text: str) -> tuple[int, ...]:
    try:
        sizes = tuple(int(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers: {text!r}") from None
    return sizes


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="segclip",
                     description="Clip 2D line segments against an "
                                 "axis-aligned rectangular window.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, with_algo=True):
        p.add_argument("--window", type=_window_arg, default=DEFAULT_WINDOW,
                       metavar="XL,YB,XR,YT",
                       help="clipping window (default 0,0,10,10)")
        if with_algo:
            p.add_argument("--algo", default="quadclip",
                           metavar="|".join(registered_clippers()),
                           help="clipping algorithm (default quadclip)")

    p_clip = sub.add_parser("clip", help="clip a segment file")
    p_clip.add_argument("input", help="segment file: x1 y1 x2 y2 per line")
    p_clip.add_argument("-o", "--output", required=True, help="output segment file")
    add_common(p_clip)
    p_clip.set_defaults(func=cmd_clip)

    p_render = sub.add_parser("render", help="render a clipping run as SVG")
    p_render.add_argument("input", help="segment file: x1 y1 x2 y2 per line")
    p_render.add_argument("-o", "--output", required=True, help="output SVG file")
    add_common(p_render)
    p_render.set_defaults(func=cmd_render)

    p_bench = sub.add_parser("bench", help="run the timing comparison suite")
    p_bench.add_argument("-o", "--output", required=True, help="output CSV file")
    p_bench.add_argument("--sizes", type=_sizes_arg, default=None,
                         metavar="N,N,...", help="corpus sizes (ascending)")
    p_bench.add_argument("--iterations", type=int, default=10,
                         help="measured passes per size (default 10)")
    p_bench.add_argument("--seed", type=int, default=1, help="base seed (default 1)")
    p_bench.add_argument("--region", type=_window_arg, default=None,
                         metavar="XL,YB,XR,YT",
                         help="sampling region (default: 3x window extent)")
    p_bench.add_argument("--paper-scale", action="store_true",
                         help="long run: sizes up to 1e7 and 100 iterations")
    add_common(p_bench, with_algo=False)
    p_bench.set_defaults(func=cmd_bench)

    p_verify = sub.add_parser("verify",
                              help="differential check against the exact oracle")
    p_verify.add_argument("--seed", type=int, default=1, help="corpus seed (default 1)")
    p_verify.add_argument("--count", type=int, default=100_000,
                          help="number of random segments (default 100000)")
    p_verify.add_argument("--tolerance", type=float, default=1e-9,
                          help="coordinate tolerance (default 1e-9)")
    p_verify.add_argument("--region", type=_window_arg, default=None,
                          metavar="XL,YB,XR,YT",
                          help="sampling region (default: 3x window extent)")
    p_verify.add_argument("--report", default=None,
                          help="also write the summary to this file")
    p_verify.add_argument("--failures", default=None,
                          help="write failing inputs to this segment file")
    add_common(p_verify)
    p_verify.set_defaults(func=cmd_verify)
    return parser


def _read_input(path):
    try:
        return read_segments(path)
    except OSError as exc:
        print(f"segclip: cannot read {path}: {exc}", file=sys.stderr)
        return None
    except SegmentFormatError as exc:
        print(f"segclip: {path}: {exc}", file=sys.stderr)
        return None


def cmd_clip(args) -> int:
    segments = _read_input(args.input)
    if segments is None:
        return USAGE_ERROR
    try:
        clip = get_clipper(args.algo)
    except UnknownClipperError:
        print(f"segclip: unknown algorithm: {args.algo}", file=sys.stderr)
        return USAGE_ERROR
    counters = Counters()
    accepted = []
    for s in segments:
        r = clip(s, args.window, counters)
        if r is not None:
            accepted.append(r)
    write_segments(args.output, accepted)
    print(f"read {len(segments)} accepted {len(accepted)} "
          f"rejected {len(segments) - len(accepted)}")
    return 0


def cmd_render(args) -> int:
    segments = _read_input(args.input)
    if segments is None:
        return USAGE_ERROR
    try:
        clip = get_clipper(args.algo)
    except UnknownClipperError:
        print(f"segclip: unknown algorithm: {args.algo}", file=sys.stderr)
        return USAGE_ERROR
    counters = Counters()
    clipped = []
    for s in segments:
        r = clip(s, args.window, counters)
        if r is not None:
            clipped.append(r)
    with open(args.output, "w", encoding="utf-8") as f:
        f.write(render_svg(segments, clipped, args.window))
    print(f"rendered {len(segments)} segments ({len(clipped)} clipped) "
          f"to {args.output}")
    return 0


def cmd_bench(args) -> int:
    sizes = args.sizes
    iterations = args.iterations
    if args.paper_scale:
        sizes = sizes or PAPER_SCALE_SIZES
        iterations = 100
    config = BenchConfig(
        sizes=sizes or DEFAULT_SIZES,
        iterations=iterations,
        seed=args.seed,
        window=args.window,
        region=args.region or default_region(args.window),
    )
    try:
        rows = run_suite(config)
    except ValueError as exc:
        print(f"segclip: {exc}", file=sys.stderr)
        return USAGE_ERROR
    write_csv(rows, args.output)
    print(format_table(rows))
    print(f"wrote {args.output}")
    return 0


def cmd_verify(args) -> int:
    spec = GeneratorSpec(seed=args.seed, count=args.count,
                         region=args.region or default_region(args.window))
    try:
        report = check_equivalence(args.algo, spec, args.window, args.tolerance)
    except UnknownClipperError:
        print(f"segclip: unknown algorithm: {args.algo}", file=sys.stderr)
        return USAGE_ERROR
    summary = report.summary()
    print(summary)
    if args.report:
        with open(args.report, "w", encoding="utf-8") as f:
            f.write(summary + "\n")
    if args.failures and report.failures:
        write_segments(args.failures, report.failures)
        print(f"wrote {len(report.failures)} failing inputs to {args.failures}")
    return 0 if report.ok else VERIFY_MISMATCH


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else USAGE_ERROR
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
