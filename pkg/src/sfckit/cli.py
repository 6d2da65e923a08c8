"""Command-line entry point.

Subcommands: path, verify, clusters, render, metrics, bench.  Exit codes:
0 success, 1 verification failure, 2 usage or input-format errors.  Every
run echoes its resolved configuration to stderr; data goes to stdout or
to the file given by --out, so reruns with equal inputs are
byte-identical (timing columns aside).
"""

from __future__ import annotations

import argparse
import sys

from . import analysis, csbench, curves, render
from .errors import CapacityError, FormatError

DEFAULT_BENCH_SCANS = "hilbert,aztec,zigzag,serpentine,raster-v"


def _order_arg(curve: curves.CurveId, order: int):
    # Grid scans have no recursion order; --order is their square side.
    return order if curve.is_sfc else (order, order)


def _write(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _echo_config(args: argparse.Namespace) -> None:
    items = [f"{k}={v}" for k, v in sorted(vars(args).items()) if k != "func"]
    print("config: " + " ".join(items), file=sys.stderr)


def _cmd_path(args) -> int:
    curve = curves.CurveId.from_name(args.curve)
    scan = curves.path(curve, _order_arg(curve, args.order))
    _write(scan.to_json() + "\n" if args.format == "json" else scan.to_csv(), args.out)
    return 0


def _cmd_verify(args) -> int:
    curve = curves.CurveId.from_name(args.curve)
    if ".." in args.orders:
        first, last = args.orders.split("..", 1)
        orders = range(int(first), int(last) + 1)
    else:
        orders = [int(args.orders)]
    all_ok = True
    print("order  cells     bijective  continuous  entry        exit          result")
    for order in orders:
        scan = curves.path(curve, _order_arg(curve, order))
        report = analysis.verify_curve(scan, expect_continuity=curve.is_sfc)
        ok = report.passed
        all_ok &= ok
        cont = {True: "yes", False: "NO", None: "n/a"}[report.continuous]
        print(
            f"{order:<6} {len(scan):<9} {'yes' if report.bijective else 'NO':<10} "
            f"{cont:<11} {str(report.entry):<12} {str(report.exit):<13} "
            f"{'pass' if ok else 'FAIL'}"
        )
        if not ok:
            print(f"  {report.summary()}", file=sys.stderr)
    return 0 if all_ok else 1


def _cmd_clusters(args) -> int:
    curve = curves.CurveId.from_name(args.curve)
    scan = curves.path(curve, _order_arg(curve, args.order))
    report = analysis.enumerate_clusters(scan, args.max_area)
    print(report.summary())
    if args.out:
        _write(report.to_csv(), args.out)
    return 0


def _cmd_render(args) -> int:
    curve = curves.CurveId.from_name(args.curve)
    scan = curves.path(curve, _order_arg(curve, args.order))
    style = render.RenderStyle(show_grid=args.show_grid)
    if args.clusters:
        report = analysis.enumerate_clusters(scan, args.max_area)
        svg = render.render_clusters(scan, report, style)
    else:
        svg = render.render_path(scan, style)
    _write(svg, args.svg)
    print(f"wrote {args.svg}", file=sys.stderr)
    return 0


def _cmd_metrics(args) -> int:
    names = [c.strip() for c in args.curves.split(",") if c.strip()]
    stats = analysis.locality_benchmark(names, args.side, args.queries, args.seed)
    print(stats.summary())
    if args.out:
        _write(stats.to_csv(), args.out)
    return 0


def _cmd_bench(args) -> int:
    images = csbench.load_idx_images(args.images, args.count)
    names = [c.strip() for c in args.scans.split(",") if c.strip()]
    scans = [curves.scan_at_side(name, 32) for name in names]
    records, stats = csbench.run_batch(images, scans, k=args.sparsity, seed=args.seed)
    if args.out:
        _write(csbench.records_to_csv(records), args.out)
    if args.stats_out:
        _write(stats.to_csv(), args.stats_out)
    print(stats.summary())
    for err in stats.errors:
        print(f"warning: {err}", file=sys.stderr)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sfckit",
        description="Space-filling curve construction, analysis, rendering, and the sparse-coding scan benchmark.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    fmt = argparse.ArgumentDefaultsHelpFormatter

    curve_names = ", ".join(c.value for c in curves.CurveId)

    p = sub.add_parser("path", help="emit a scan order as CSV or JSON", formatter_class=fmt)
    p.add_argument("--curve", required=True, help=f"one of: {curve_names}")
    p.add_argument("--order", required=True, type=int, help="recursion order (SFCs) or grid side (scans)")
    p.add_argument("--format", choices=("json", "csv"), default="csv", help="output format")
    p.add_argument("--out", default=None, help="output file (default stdout)")
    p.set_defaults(func=_cmd_path)

    p = sub.add_parser("verify", help="check bijectivity and continuity over a range of orders", formatter_class=fmt)
    p.add_argument("--curve", required=True, help=f"one of: {curve_names}")
    p.add_argument("--orders", required=True, help="order range A..B or a single order")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("clusters", help="enumerate rectangular clusters", formatter_class=fmt)
    p.add_argument("--curve", required=True, help=f"one of: {curve_names}")
    p.add_argument("--order", required=True, type=int, help="recursion order (SFCs) or grid side (scans)")
    p.add_argument("--max-area", type=int, default=None, help="largest rectangle area to report (default: whole grid)")
    p.add_argument("--out", default=None, help="write the full cluster list as CSV")
    p.set_defaults(func=_cmd_clusters)

    p = sub.add_parser("render", help="draw a curve (optionally with cluster overlay) as SVG", formatter_class=fmt)
    p.add_argument("--curve", required=True, help=f"one of: {curve_names}")
    p.add_argument("--order", required=True, type=int, help="recursion order (SFCs) or grid side (scans)")
    p.add_argument("--svg", required=True, help="output SVG path")
    p.add_argument("--clusters", action="store_true", help="overlay rectangular clusters")
    p.add_argument("--max-area", type=int, default=None, help="area cap for the cluster overlay")
    p.add_argument("--show-grid", action="store_true", help="draw cell grid lines")
    p.set_defaults(func=_cmd_render)

    p = sub.add_parser("metrics", help="locality metrics across scan orders", formatter_class=fmt)
    p.add_argument("--curves", required=True, help="comma-separated curve names")
    p.add_argument("--side", required=True, type=int, help="square grid side")
    p.add_argument("--queries", type=int, default=200, help="number of sampled query rectangles")
    p.add_argument("--seed", type=int, default=0, help="query sampling seed")
    p.add_argument("--out", default=None, help="write stats as CSV")
    p.set_defaults(func=_cmd_metrics)

    p = sub.add_parser("bench", help="sparse-coding benchmark over scan orders", formatter_class=fmt)
    p.add_argument("--images", required=True, help="IDX3 image file (MNIST layout)")
    p.add_argument("--count", type=int, default=100, help="number of images to load")
    p.add_argument("--sparsity", type=int, default=csbench.DEFAULT_SPARSITY, help="pursuit sparsity K")
    p.add_argument("--scans", default=DEFAULT_BENCH_SCANS, help="comma-separated scan names")
    p.add_argument("--out", default=None, help="write per-record CSV")
    p.add_argument("--stats-out", default=None, help="write box-plot stats CSV")
    p.add_argument("--seed", type=int, default=0, help="recorded in the stats for provenance")
    p.add_argument(
        "--serial-timing",
        action="store_true",
        help="strictly serial execution for comparable timings (the default; kept for explicit pinning)",
    )
    p.set_defaults(func=_cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _echo_config(args)
    try:
        return args.func(args)
    except (FormatError, CapacityError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    run()
