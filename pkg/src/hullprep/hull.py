"""Convex hull oracle and canonical polygon comparison.

The hull here is the verification reference for the elimination filter, not a
production path.  Canonical form: counter-clockwise strict vertices (no three
consecutive collinear), starting at the lexicographically smallest vertex.
Equality of point sets "up to convex hull" is defined as equality of these
canonical vertex lists; collinear boundary points are not vertices, which
matches the filter's strict side classification.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .geometry import Orientation, Point2, orientation

__all__ = ["HullPolygon", "convex_hull", "hulls_equal", "contains_point", "contains_points"]


@dataclass(frozen=True)
class HullPolygon:
    """Canonical convex polygon.

    Vertices are pairwise distinct, counter-clockwise, start at the
    lexicographically smallest vertex and every consecutive triple is a
    strict left turn.  One- and two-vertex degenerate hulls are allowed.
    Construct via convex_hull; direct construction validates canonicality.
    """

    vertices: tuple[Point2, ...]

    def __post_init__(self):
        v = self.vertices
        if not v:
            raise ValueError("a hull polygon needs at least one vertex")
        if len(set(v)) != len(v):
            raise ValueError("hull vertices must be pairwise distinct")
        if min(v) != v[0]:
            raise ValueError("hull must start at its lexicographically smallest vertex")
        k = len(v)
        if k >= 3:
            for i in range(k):
                trip = (v[i], v[(i + 1) % k], v[(i + 2) % k])
                if orientation(*trip) is not Orientation.COUNTERCLOCKWISE:
                    raise ValueError(f"non-strict or clockwise turn at {trip}")

    def __len__(self) -> int:
        return len(self.vertices)


def convex_hull(points: Iterable[Point2]) -> HullPolygon:
    """Canonical convex hull of a non-empty point set (monotone chain).

    Duplicates and collinear boundary points are dropped; the result
    satisfies every HullPolygon invariant.  This is the test-path oracle --
    clarity over speed.
    """
    pts = sorted(set(points))
    if not pts:
        raise ValueError("cannot take the hull of an empty point set")
    if len(pts) == 1:
        return HullPolygon((pts[0],))

    def chain(seq):
        out = []
        for p in seq:
            while len(out) >= 2 and orientation(out[-2], out[-1], p) is not Orientation.COUNTERCLOCKWISE:
                out.pop()
            out.append(p)
        return out

    lower = chain(pts)
    upper = chain(reversed(pts))
    return HullPolygon(tuple(lower[:-1] + upper[:-1]))


def hulls_equal(a: HullPolygon, b: HullPolygon) -> bool:
    """True iff the canonical vertex lists match element by element."""
    return a.vertices == b.vertices


def contains_point(h: HullPolygon, p: Point2) -> bool:
    """Convex polygon membership; boundary points count as contained."""
    v = h.vertices
    if len(v) == 1:
        return p == v[0]
    if len(v) == 2:
        if orientation(v[0], v[1], p) is not Orientation.COLLINEAR:
            return False
        return (
            min(v[0].x, v[1].x) <= p.x <= max(v[0].x, v[1].x)
            and min(v[0].y, v[1].y) <= p.y <= max(v[0].y, v[1].y)
        )
    k = len(v)
    for i in range(k):
        a, b = v[i], v[(i + 1) % k]
        if orientation(a, b, p) is Orientation.CLOCKWISE:
            return False
    return True


def contains_points(h: HullPolygon, xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
    """Vectorized contains_point over coordinate arrays.

    Same edge-orientation rule as contains_point, evaluated in plain double
    arithmetic (no exact fallback); intended for Monte Carlo counting where
    boundary-grazing misclassification has probability zero.
    """
    xs = np.asarray(xs, dtype=float)
    ys = np.asarray(ys, dtype=float)
    v = h.vertices
    if len(v) == 1:
        return (xs == v[0].x) & (ys == v[0].y)
    if len(v) == 2:
        a, b = v
        cross = (b.x - a.x) * (ys - a.y) - (b.y - a.y) * (xs - a.x)
        inside = cross == 0.0
        inside &= (np.minimum(a.x, b.x) <= xs) & (xs <= np.maximum(a.x, b.x))
        inside &= (np.minimum(a.y, b.y) <= ys) & (ys <= np.maximum(a.y, b.y))
        return inside
    inside = np.ones(xs.shape, dtype=bool)
    k = len(v)
    for i in range(k):
        a, b = v[i], v[(i + 1) % k]
        cross = (b.x - a.x) * (ys - a.y) - (b.y - a.y) * (xs - a.x)
        inside &= cross >= 0.0
    return inside
