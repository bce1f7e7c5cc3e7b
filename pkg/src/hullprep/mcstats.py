"""Monte Carlo estimators for the area and point-count identities.

Two families of experiments back the expected-fraction claims the filter's
size analysis rests on:

* area samplers -- draw the random cut points directly and average the
  resulting region areas.  In an a-by-b box, the quadrilateral obtained by
  joining one uniform point per edge has mean area ab/2 and each corner
  triangle ab/8; the inner triangle cut from a right triangle with legs a, b
  by joining uniform points on the legs has mean area ab/8 (a quarter of the
  triangle).

* count experiment -- draw n uniform points in a box, draw the quadrilateral
  the same way, and count points inside the quadrilateral and inside each
  corner triangle against n/2 and n/8.  The points are sampled in the fixed
  box whose edges carry the cut points, matching the probability model of
  the area samplers; conditioning the box on the sample instead would pin
  the four extreme points to the box boundary and bias the quadrilateral
  count low by about 2 points.

Every report carries mean, sample variance, standard error and the z-score
against the analytic expectation.  Tolerance policy: |z| <= 3, with one
retry on a fresh seed (expected flake rate about 0.3% per check before the
retry).  For the count experiment, whose trial i draws from seed + i, a
fresh seed means jumping past the used block (seed + trials); bumping by one
would rerun almost the same trials.  Trials are merged through sufficient
statistics (count, sum, sum of squares), so batches may run in parallel with
per-trial seeds and be folded together afterwards.
"""

from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass

import numpy as np

from .geometry import BoundingBox, Point2
from .hull import contains_points, convex_hull
from .pointgen import UNIT_SQUARE, make_rng, sample_coords

__all__ = [
    "TrialReport",
    "RunningStats",
    "box_partition_areas",
    "quadrilateral_area_sample",
    "corner_area_sample",
    "inner_triangle_area_sample",
    "quadrilateral_area_experiment",
    "corner_area_experiment",
    "inner_triangle_area_experiment",
    "count_experiment",
    "COUNT_REGIONS",
    "reports_to_csv",
    "reports_to_json",
    "REPORT_CSV_HEADER",
]

REPORT_CSV_HEADER = "experiment,trials,mean,variance,std_error,expected,z_score"

COUNT_REGIONS = ("quadrilateral", "corner_tl", "corner_tr", "corner_br", "corner_bl")


@dataclass(frozen=True)
class TrialReport:
    """Summary of one Monte Carlo estimate against its analytic target."""

    experiment: str
    trials: int
    mean: float
    variance: float
    std_error: float
    expected: float
    z_score: float

    def passed(self, z_limit: float = 3.0) -> bool:
        return abs(self.z_score) <= z_limit


@dataclass
class RunningStats:
    """Mergeable sufficient statistics: count, sum, sum of squares."""

    count: int = 0
    total: float = 0.0
    total_sq: float = 0.0

    def add(self, x: float) -> None:
        self.count += 1
        self.total += x
        self.total_sq += x * x

    def add_array(self, xs: np.ndarray) -> None:
        self.count += xs.size
        self.total += float(xs.sum())
        self.total_sq += float((xs * xs).sum())

    def merge(self, other: "RunningStats") -> None:
        self.count += other.count
        self.total += other.total
        self.total_sq += other.total_sq

    def report(self, experiment: str, expected: float) -> TrialReport:
        if self.count < 1:
            raise ValueError("no samples accumulated")
        mean = self.total / self.count
        if self.count > 1:
            variance = max(0.0, (self.total_sq - self.count * mean * mean) / (self.count - 1))
        else:
            variance = 0.0
        std_error = math.sqrt(variance / self.count)
        if std_error > 0.0:
            z = (mean - expected) / std_error
        else:
            z = 0.0 if mean == expected else math.inf
        return TrialReport(experiment, self.count, mean, variance, std_error, expected, z)


def box_partition_areas(a, b, x, y, z, t):
    """Areas of the five regions the four edge cuts carve out of an a-by-b box.

    x and t are offsets along the horizontal edges (x from the top-left
    corner, t from the bottom-left), y and z down the vertical edges (y on
    the left, z on the right, both from the top).  Returns (quadrilateral,
    top_left, top_right, bottom_right, bottom_left); the five tile the box.
    Accepts scalars or numpy arrays.
    """
    tl = 0.5 * x * y
    tr = 0.5 * (a - x) * z
    br = 0.5 * (a - t) * (b - z)
    bl = 0.5 * t * (b - y)
    quad = a * b - (tl + tr + br + bl)
    return quad, tl, tr, br, bl


def _draw_cuts(a: float, b: float, rng, size=None):
    # Fixed draw order x, y, z, t; with a size this is four blocks.
    x = rng.uniform(0.0, a, size)
    y = rng.uniform(0.0, b, size)
    z = rng.uniform(0.0, b, size)
    t = rng.uniform(0.0, a, size)
    return x, y, z, t


def quadrilateral_area_sample(a: float, b: float, rng) -> float:
    """One sample of the quadrilateral area; always in [0, ab]."""
    x, y, z, t = _draw_cuts(a, b, rng)
    return box_partition_areas(a, b, x, y, z, t)[0]


def corner_area_sample(a: float, b: float, rng) -> float:
    """One sample of the top-left corner triangle area; in [0, ab/2]."""
    x = rng.uniform(0.0, a)
    y = rng.uniform(0.0, b)
    return 0.5 * x * y


def inner_triangle_area_sample(a: float, b: float, rng) -> float:
    """One sample of the inner triangle cut from a right triangle with legs a, b.

    Joins a uniform point on each leg; the sample is half their product, and
    its mean is a quarter of the triangle's area ab/2.
    """
    x1 = rng.uniform(0.0, a)
    y1 = rng.uniform(0.0, b)
    return 0.5 * x1 * y1


def quadrilateral_area_experiment(trials: int, seed: int, a: float = 1.0, b: float = 1.0) -> TrialReport:
    """Mean quadrilateral area over vectorized draws; target ab/2."""
    rng = make_rng(seed)
    x, y, z, t = _draw_cuts(a, b, rng, trials)
    quad = box_partition_areas(a, b, x, y, z, t)[0]
    stats = RunningStats()
    stats.add_array(quad)
    return stats.report("area_quadrilateral", 0.5 * a * b)


def corner_area_experiment(trials: int, seed: int, a: float = 1.0, b: float = 1.0) -> TrialReport:
    """Mean corner triangle area; target ab/8."""
    rng = make_rng(seed)
    x = rng.uniform(0.0, a, trials)
    y = rng.uniform(0.0, b, trials)
    stats = RunningStats()
    stats.add_array(0.5 * x * y)
    return stats.report("area_corner", a * b / 8.0)


def inner_triangle_area_experiment(trials: int, seed: int, a: float = 1.0, b: float = 1.0) -> TrialReport:
    """Mean inner triangle area; target ab/8, a quarter of the triangle ab/2."""
    rng = make_rng(seed)
    x1 = rng.uniform(0.0, a, trials)
    y1 = rng.uniform(0.0, b, trials)
    stats = RunningStats()
    stats.add_array(0.5 * x1 * y1)
    return stats.report("area_inner_triangle", a * b / 8.0)


def count_experiment(
    n: int, trials: int, seed: int, box: BoundingBox = UNIT_SQUARE
) -> dict[str, TrialReport]:
    """Point-count consequence of the area identities.

    Per trial (trial i uses seed + i): draw n uniform points in the box, one
    uniform cut point on each box edge (order top, right, bottom, left), and
    count the points inside the quadrilateral spanned by the cuts and inside
    each corner triangle; boundary points count as inside.  Reports the mean
    counts against n/2 for the quadrilateral and n/8 per corner.
    """
    if n < 4:
        raise ValueError(f"count experiment needs n >= 4, got {n}")
    if trials < 1:
        raise ValueError(f"need at least one trial, got {trials}")
    x0, y0 = box.min_corner.x, box.min_corner.y
    x1, y1 = box.max_corner.x, box.max_corner.y
    corner_tl = Point2(x0, y1)
    corner_tr = Point2(x1, y1)
    corner_br = Point2(x1, y0)
    corner_bl = Point2(x0, y0)

    acc = {name: RunningStats() for name in COUNT_REGIONS}
    for i in range(trials):
        rng = make_rng(seed + i)
        coords = sample_coords(rng, n, box)
        u = rng.random(4)
        on_top = Point2(x0 + u[0] * (x1 - x0), y1)
        on_right = Point2(x1, y0 + u[1] * (y1 - y0))
        on_bottom = Point2(x0 + u[2] * (x1 - x0), y0)
        on_left = Point2(x0, y0 + u[3] * (y1 - y0))

        regions = {
            "quadrilateral": (on_top, on_right, on_bottom, on_left),
            "corner_tl": (corner_tl, on_top, on_left),
            "corner_tr": (corner_tr, on_top, on_right),
            "corner_br": (corner_br, on_bottom, on_right),
            "corner_bl": (corner_bl, on_bottom, on_left),
        }
        xs, ys = coords[:, 0], coords[:, 1]
        for name, pts in regions.items():
            poly = convex_hull(pts)
            acc[name].add(int(contains_points(poly, xs, ys).sum()))

    expected = {name: (n / 2.0 if name == "quadrilateral" else n / 8.0) for name in COUNT_REGIONS}
    return {
        name: acc[name].report(f"count_{name}", expected[name]) for name in COUNT_REGIONS
    }


def reports_to_csv(reports) -> str:
    """CSV rows (with header) for a sequence of reports."""
    lines = [REPORT_CSV_HEADER]
    for r in reports:
        lines.append(
            f"{r.experiment},{r.trials},{r.mean!r},{r.variance!r},"
            f"{r.std_error!r},{r.expected!r},{r.z_score!r}"
        )
    return "\n".join(lines) + "\n"


def reports_to_json(reports) -> str:
    """JSON array of report objects, stable key order."""
    return json.dumps([asdict(r) for r in reports], sort_keys=True, indent=2) + "\n"
