"""Command-line benchmark harness for the corner-pruning filter.

Subcommands:

* filter   -- run the filter on a point file or a generated set, write the
              retained points, print a JSON summary.
* verify   -- check that input and retained set have identical canonical
              hulls; on mismatch the input is preserved as a regression
              fixture and the exit code is 1.
* scaling  -- retained-set size versus n over seeded trials: CSV, an SVG
              scatter of mean retained size against ln n with a least-squares
              line, and the fit as JSON.
* bench    -- filter wall time versus n (median of trials, one discarded
              warm-up run per n, generation excluded), CSV plus doubling
              ratios.
* lemmas   -- all Monte Carlo estimators with the |z| <= 3 policy and one
              retry on the next seed; exit 1 if any final report fails.

Exit codes: 0 success, 1 verification/threshold failure, 2 usage or I/O
error.  Seeds derive deterministically: trial t of the j-th n-cell uses
base_seed + j*trials + t, so identical flags reproduce identical artifacts
(wall-time fields aside).
"""

from __future__ import annotations

import argparse
import json
import math
import statistics
import sys
import time
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path

import numpy as np

from .elimination import Corner, preprocess, preprocess_array
from .geometry import BoundingBox, Point2
from .hull import convex_hull, hulls_equal
from .mcstats import (
    TrialReport,
    corner_area_experiment,
    count_experiment,
    inner_triangle_area_experiment,
    quadrilateral_area_experiment,
    reports_to_csv,
    reports_to_json,
)
from .pointgen import (
    UNIT_SQUARE,
    GenSpec,
    PointFormatError,
    generate,
    make_rng,
    read_points,
    sample_coords,
    write_points,
)
from .svgplot import scatter_svg

__all__ = [
    "ScalingRow",
    "BenchRow",
    "FitSummary",
    "run_scaling",
    "run_bench",
    "run_lemmas",
    "scaling_rows_to_csv",
    "bench_rows_to_csv",
    "main",
    "SCALING_CSV_HEADER",
    "BENCH_CSV_HEADER",
]

SCALING_CSV_HEADER = (
    "n,trials,mean_retained,std_retained,mean_depth_per_corner,mean_wall_time,hull_size_mean"
)
BENCH_CSV_HEADER = "n,median_time"

DEFAULT_SCALING_NS = [2**k for k in range(10, 21)]
DEFAULT_BENCH_NS = [2**k for k in range(16, 23)]


class UsageError(Exception):
    """Bad flag combination detected after argparse."""


@dataclass(frozen=True)
class ScalingRow:
    """One n-cell of the retained-size scaling experiment."""

    n: int
    trials: int
    mean_retained: float
    std_retained: float
    mean_depth_per_corner: float
    mean_wall_time: float
    hull_size_mean: float


@dataclass(frozen=True)
class BenchRow:
    """One n-cell of the timing experiment."""

    n: int
    median_time: float
    retained_size: int


@dataclass(frozen=True)
class FitSummary:
    """Least-squares fit mean_retained ~ intercept + slope * ln n."""

    intercept: float
    slope: float
    residual_norm: float
    relative_residual: float


def run_scaling(
    n_list, trials: int, seed: int, box: BoundingBox = UNIT_SQUARE
) -> tuple[list[ScalingRow], FitSummary]:
    """Measure retained-set size, depth, hull size and filter time per n.

    hull_size_mean is the canonical hull size of the retained set, which by
    hull preservation equals the input's hull size (that equality is what
    `verify` checks); computing it on the retained set keeps the experiment
    linear in n.
    """
    if not n_list:
        raise ValueError("need at least one n")
    if trials < 1:
        raise ValueError("need at least one trial")
    rows = []
    for j, n in enumerate(n_list):
        base = seed + j * trials
        retained, depths, times, hull_sizes = [], [], [], []
        for t in range(trials):
            coords = sample_coords(make_rng(base + t), n, box)
            t0 = time.perf_counter()
            res = preprocess_array(coords)
            times.append(time.perf_counter() - t0)
            retained.append(len(res.retained))
            depths.append(
                sum(len(v) for v in res.per_corner_stats.values()) / len(Corner)
            )
            if len(res.retained):
                pts = [Point2(x, y) for x, y in res.retained]
                hull_sizes.append(len(convex_hull(pts)))
            else:
                hull_sizes.append(0)
        rows.append(
            ScalingRow(
                n=n,
                trials=trials,
                mean_retained=statistics.fmean(retained),
                std_retained=statistics.stdev(retained) if trials > 1 else 0.0,
                mean_depth_per_corner=statistics.fmean(depths),
                mean_wall_time=statistics.fmean(times),
                hull_size_mean=statistics.fmean(hull_sizes),
            )
        )
    return rows, fit_log_curve(rows)


def fit_log_curve(rows) -> FitSummary:
    """Fit mean_retained against ln n; relative residual is ||r|| / ||y||."""
    usable = [(r.n, r.mean_retained) for r in rows if r.n > 0]
    if not usable:
        return FitSummary(0.0, 0.0, 0.0, 0.0)
    x = np.log([n for n, _ in usable])
    y = np.array([m for _, m in usable])
    if len(set(n for n, _ in usable)) < 2:
        return FitSummary(float(y.mean()), 0.0, 0.0, 0.0)
    slope, intercept = np.polyfit(x, y, 1)
    resid_norm = float(np.linalg.norm(y - (intercept + slope * x)))
    y_norm = float(np.linalg.norm(y))
    rel = resid_norm / y_norm if y_norm > 0 else 0.0
    return FitSummary(float(intercept), float(slope), resid_norm, rel)


def run_bench(
    n_list, trials: int, seed: int, box: BoundingBox = UNIT_SQUARE
) -> tuple[list[BenchRow], list[dict]]:
    """Median filter time per n, with one discarded warm-up run per cell.

    Generation happens outside the timed region.  The second return value
    lists the time ratios of consecutive n-cells (the doubling ratios when
    n_list doubles).
    """
    if not n_list:
        raise ValueError("need at least one n")
    if trials < 1:
        raise ValueError("need at least one trial")
    rows = []
    for j, n in enumerate(n_list):
        base = seed + j * trials
        times = []
        retained_size = 0
        for t in range(trials):
            coords = sample_coords(make_rng(base + t), n, box)
            if t == 0:
                preprocess_array(coords)  # warm-up, discarded
            t0 = time.perf_counter()
            res = preprocess_array(coords)
            times.append(time.perf_counter() - t0)
            retained_size = len(res.retained)
        rows.append(BenchRow(n=n, median_time=statistics.median(times), retained_size=retained_size))
    ratios = []
    for prev, cur in zip(rows, rows[1:]):
        if prev.median_time > 0:
            ratios.append(
                {
                    "n_from": prev.n,
                    "n_to": cur.n,
                    "ratio": cur.median_time / prev.median_time,
                }
            )
    return rows, ratios


def run_lemmas(
    trials: int,
    seed: int,
    count_n: int = 1000,
    count_trials: int = 10_000,
    z_limit: float = 3.0,
) -> tuple[list[TrialReport], bool]:
    """All Monte Carlo estimators with the one-retry-on-a-fresh-seed policy.

    Each experiment gets its own seed offset; with a shared seed the corner
    and inner-triangle estimators would replay the same draws and report
    identical numbers.
    """

    def with_retry(run, offset: int) -> TrialReport:
        report = run(seed + offset)
        if abs(report.z_score) <= z_limit:
            return report
        return run(seed + offset + 1)

    reports = [
        with_retry(lambda s: quadrilateral_area_experiment(trials, s), 0),
        with_retry(lambda s: corner_area_experiment(trials, s), 1_000_003),
        with_retry(lambda s: inner_triangle_area_experiment(trials, s), 2_000_003),
    ]
    counts = count_experiment(count_n, count_trials, seed)
    if any(abs(r.z_score) > z_limit for r in counts.values()):
        # Retry on a disjoint trial block; seed + 1 would overlap the first.
        counts = count_experiment(count_n, count_trials, seed + count_trials)
    reports.extend(counts.values())
    return reports, all(abs(r.z_score) <= z_limit for r in reports)


def scaling_rows_to_csv(rows) -> str:
    lines = [SCALING_CSV_HEADER]
    for r in rows:
        lines.append(
            f"{r.n},{r.trials},{r.mean_retained!r},{r.std_retained!r},"
            f"{r.mean_depth_per_corner!r},{r.mean_wall_time!r},{r.hull_size_mean!r}"
        )
    return "\n".join(lines) + "\n"


def bench_rows_to_csv(rows) -> str:
    lines = [BENCH_CSV_HEADER]
    for r in rows:
        lines.append(f"{r.n},{r.median_time!r}")
    return "\n".join(lines) + "\n"


def _parse_box(text: str) -> BoundingBox:
    parts = text.split(",")
    if len(parts) != 4:
        raise UsageError(f"--box expects minx,miny,maxx,maxy, got {text!r}")
    try:
        minx, miny, maxx, maxy = (float(v) for v in parts)
    except ValueError:
        raise UsageError(f"--box expects four floats, got {text!r}") from None
    try:
        return BoundingBox(Point2(minx, miny), Point2(maxx, maxy))
    except ValueError as e:
        raise UsageError(str(e)) from None


def _parse_n_list(text: str) -> list[int]:
    try:
        values = [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise UsageError(f"--n-list expects comma-separated integers, got {text!r}") from None
    if not values or any(v < 0 for v in values):
        raise UsageError(f"--n-list needs non-negative integers, got {text!r}")
    return values


def _load_points(args) -> list[Point2]:
    if args.input is not None:
        return read_points(args.input)
    if args.n is None:
        raise UsageError("provide --in FILE or --n COUNT")
    box = _parse_box(args.box) if args.box else UNIT_SQUARE
    return generate(GenSpec(n=args.n, box=box, seed=args.seed))


def _print_json(obj) -> None:
    print(json.dumps(obj, sort_keys=True))


def cmd_filter(args) -> int:
    points = _load_points(args)
    result = preprocess(points)
    seen = set()
    ordered = []
    for p in points:
        if p in result.retained and p not in seen:
            seen.add(p)
            ordered.append(p)
    write_points(args.out, ordered)
    _print_json(
        {
            "input_size": len(points),
            "retained_size": len(result.retained),
            "per_corner_depth": {c.value: len(result.per_corner_stats[c]) for c in Corner},
            "total_recursions": result.total_recursions,
            "out": str(args.out),
        }
    )
    return 0


def _fixture_path(directory) -> Path:
    stamp = datetime.now(timezone.utc).strftime("%Y%m%dT%H%M%S_%f")
    return Path(directory) / f"hull_mismatch_{stamp}.points"


def cmd_verify(args) -> int:
    points = _load_points(args)
    if not points:
        _print_json({"equal": True, "input_size": 0, "retained_size": 0, "hull_size": 0})
        return 0
    result = preprocess(points)
    hull_in = convex_hull(points)
    hull_out = convex_hull(result.retained)
    equal = hulls_equal(hull_in, hull_out)
    _print_json(
        {
            "equal": equal,
            "input_size": len(points),
            "retained_size": len(result.retained),
            "hull_size": len(hull_in),
        }
    )
    if equal:
        return 0
    fixture = _fixture_path(args.fixture_dir)
    write_points(fixture, points)
    print(f"hull mismatch: input preserved at {fixture}", file=sys.stderr)
    return 1


def cmd_scaling(args) -> int:
    n_list = _parse_n_list(args.n_list) if args.n_list else DEFAULT_SCALING_NS
    box = _parse_box(args.box) if args.box else UNIT_SQUARE
    rows, fit = run_scaling(n_list, args.trials, args.seed, box)
    out = Path(args.out)
    out.write_text(scaling_rows_to_csv(rows), encoding="utf-8")
    svg_path = out.with_suffix(".svg")
    plotted = [r for r in rows if r.n > 0]
    if plotted:
        svg_path.write_text(
            scatter_svg(
                [math.log(r.n) for r in plotted],
                [r.mean_retained for r in plotted],
                line=(fit.intercept, fit.slope),
                x_label="ln n",
                y_label="mean retained",
                title="retained set size vs ln n",
            ),
            encoding="utf-8",
        )
    _print_json(
        {
            "csv": str(out),
            "svg": str(svg_path) if plotted else None,
            "fit": {
                "intercept": fit.intercept,
                "slope": fit.slope,
                "residual_norm": fit.residual_norm,
                "relative_residual": fit.relative_residual,
            },
            "rows": [
                {"n": r.n, "mean_retained": r.mean_retained, "hull_size_mean": r.hull_size_mean}
                for r in rows
            ],
        }
    )
    return 0


def cmd_bench(args) -> int:
    n_list = _parse_n_list(args.n_list) if args.n_list else DEFAULT_BENCH_NS
    box = _parse_box(args.box) if args.box else UNIT_SQUARE
    rows, ratios = run_bench(n_list, args.trials, args.seed, box)
    out = Path(args.out)
    out.write_text(bench_rows_to_csv(rows), encoding="utf-8")
    _print_json(
        {
            "csv": str(out),
            "rows": [
                {"n": r.n, "median_time": r.median_time, "retained_size": r.retained_size}
                for r in rows
            ],
            "doubling_ratios": ratios,
        }
    )
    return 0


def cmd_lemmas(args) -> int:
    if args.trials < 1000:
        raise UsageError(f"lemmas needs --trials >= 1000, got {args.trials}")
    reports, ok = run_lemmas(
        args.trials, args.seed, count_n=args.count_n, count_trials=args.count_trials
    )
    text = reports_to_json(reports) if args.format == "json" else reports_to_csv(reports)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        print(text, end="")
    if not ok:
        for r in reports:
            if abs(r.z_score) > 3.0:
                print(
                    f"threshold failure: {r.experiment} mean={r.mean} "
                    f"expected={r.expected} z={r.z_score}",
                    file=sys.stderr,
                )
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hullprep",
        description="Corner-pruning convex hull preprocessing: filter, verify, benchmark.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, n_default=None, trials_default=1):
        p.add_argument("--seed", type=int, default=0, help="base RNG seed (unsigned 64-bit)")
        p.add_argument("--n", type=int, default=n_default, help="number of generated points")
        p.add_argument("--trials", type=int, default=trials_default, help="trials per cell")
        p.add_argument("--box", default=None, help="generation box: minx,miny,maxx,maxy")
        p.add_argument("--format", choices=("csv", "json"), default="csv", help="report format")

    p = sub.add_parser("filter", help="run the filter and write retained points")
    add_common(p)
    p.add_argument("--in", dest="input", default=None, help="input point file")
    p.add_argument("--out", required=True, help="output point file")
    p.set_defaults(func=cmd_filter)

    p = sub.add_parser("verify", help="check hull equality of input and retained set")
    add_common(p)
    p.add_argument("--in", dest="input", default=None, help="input point file")
    p.add_argument(
        "--fixture-dir", default=".", help="where to preserve mismatching inputs"
    )
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("scaling", help="retained-size scaling experiment")
    add_common(p, trials_default=50)
    p.add_argument("--n-list", default=None, help="comma-separated n values (default 2^10..2^20)")
    p.add_argument("--out", default="scaling.csv", help="CSV output path (SVG lands beside it)")
    p.set_defaults(func=cmd_scaling)

    p = sub.add_parser("bench", help="filter wall-time experiment")
    add_common(p, trials_default=5)
    p.add_argument("--n-list", default=None, help="comma-separated n values (default 2^16..2^22)")
    p.add_argument("--out", default="bench.csv", help="CSV output path")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("lemmas", help="Monte Carlo estimator suite")
    add_common(p, trials_default=1_000_000)
    p.add_argument("--count-n", type=int, default=1000, help="points per count-experiment trial")
    p.add_argument("--count-trials", type=int, default=10_000, help="count-experiment trials")
    p.add_argument("--out", default=None, help="write reports here instead of stdout")
    p.set_defaults(func=cmd_lemmas)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except PointFormatError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
