"""Seedable uniform point generation and point-set file I/O.

The generator is NumPy's PCG64 behind numpy.random.Generator, seeded through
SeedSequence with a 64-bit unsigned seed.  NumPy guarantees the stream of a
given BitGenerator is stable across platforms and releases, so an identical
GenSpec reproduces bit-identical points everywhere.  Parallel or batched
experiments derive one seed per trial as base_seed + trial_index.

Point file format: UTF-8 text, one "x,y" pair per line with decimal float
literals, optional spaces around the comma, '#' lines are comments.  Blank
lines are ignored.  Values are written with repr() so a write/read round
trip is exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .geometry import BoundingBox, Point2

__all__ = [
    "UNIT_SQUARE",
    "GenSpec",
    "PointFormatError",
    "make_rng",
    "sample_coords",
    "generate",
    "read_points",
    "write_points",
]

UNIT_SQUARE = BoundingBox(Point2(0.0, 0.0), Point2(1.0, 1.0))

_MAX_SEED = 2**64


@dataclass(frozen=True)
class GenSpec:
    """How many points, in which box, from which seed."""

    n: int
    box: BoundingBox = field(default=UNIT_SQUARE)
    seed: int = 0

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"point count must be >= 0, got {self.n}")
        if not 0 <= self.seed < _MAX_SEED:
            raise ValueError(f"seed must be an unsigned 64-bit integer, got {self.seed}")


class PointFormatError(ValueError):
    """A point file line that cannot be parsed; carries the 1-based line number."""

    def __init__(self, path, line_no: int, message: str):
        super().__init__(f"{path}:{line_no}: {message}")
        self.path = path
        self.line_no = line_no


def make_rng(seed: int) -> np.random.Generator:
    """Fresh PCG64 generator for the given seed."""
    return np.random.Generator(np.random.PCG64(seed))


def sample_coords(rng: np.random.Generator, n: int, box: BoundingBox = UNIT_SQUARE) -> np.ndarray:
    """(n, 2) float64 array of i.i.d. uniform points in the box.

    Draw order is two blocks of unit uniforms, all x first, then all y.  The
    result is column-major so each coordinate column is a contiguous view
    (the filter works per axis).  Values are clipped to the box to guard
    against scaling round-off on boxes whose width is not exactly
    representable.
    """
    u = rng.random((2, n))
    for row, lo, hi in ((0, box.min_corner.x, box.max_corner.x), (1, box.min_corner.y, box.max_corner.y)):
        u[row] *= hi - lo
        u[row] += lo
        np.clip(u[row], lo, hi, out=u[row])
    return u.T


def generate(spec: GenSpec) -> list[Point2]:
    """Exactly spec.n uniform points; identical spec, identical output."""
    coords = sample_coords(make_rng(spec.seed), spec.n, spec.box)
    return [Point2(x, y) for x, y in coords]


def read_points(path) -> list[Point2]:
    """Parse a point file; raises PointFormatError with the offending line."""
    points = []
    with open(path, "r", encoding="utf-8") as f:
        for line_no, raw in enumerate(f, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split(",")
            if len(parts) != 2:
                raise PointFormatError(path, line_no, f"expected 'x,y', got {raw.rstrip()!r}")
            try:
                x = float(parts[0])
                y = float(parts[1])
            except ValueError:
                raise PointFormatError(
                    path, line_no, f"not a pair of float literals: {raw.rstrip()!r}"
                ) from None
            if not (math.isfinite(x) and math.isfinite(y)):
                raise PointFormatError(path, line_no, f"non-finite coordinate: {raw.rstrip()!r}")
            points.append(Point2(x, y))
    return points


def write_points(path, points) -> None:
    """Write points one per line; repr() keeps the round trip exact."""
    with open(path, "w", encoding="utf-8") as f:
        for p in points:
            f.write(f"{p.x!r},{p.y!r}\n")
