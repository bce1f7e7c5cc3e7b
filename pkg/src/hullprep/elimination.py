"""Recursive corner-pruning filter for planar point sets.

The filter keeps the four coordinate extremes, splits the input into the four
subsets lying strictly outside the chords joining adjacent extremes, and then
prunes each corner subset independently: find the subset's extremes, keep the
two spanning that corner's chord, recurse on the points strictly outside it,
until at most two points remain.  Every convex hull vertex of the input
survives, and on uniform inputs the retained set is tiny.

The engine works on contiguous coordinate arrays with vectorized strict side
tests.  Classification is sign-exact: a conservative error bound (computed
from the set's extremes) flags the few points whose cross product is too
small to trust, and those are settled with geometry.cross_sign, so the array
path and the Point2 path always agree.  Each corner is an explicit loop, so
recursion depth never touches the call stack.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable

import numpy as np

from .geometry import Extremes, Point2, cross_sign, is_strictly_above
from .geometry import _ERR_COEFF

__all__ = [
    "Corner",
    "LevelRecord",
    "FilterResult",
    "ArrayFilterResult",
    "preprocess",
    "preprocess_array",
    "point_selection",
    "split_regions",
]

# Inflates the static error bound to absorb its own rounding; still far too
# small to flag anything but genuinely degenerate cross products.
_BOUND_SAFETY = 1.0 + 1e-10


class Corner(Enum):
    """The four corner regions, named for the box corner they cover."""

    TR = "TR"
    BR = "BR"
    BL = "BL"
    TL = "TL"


@dataclass(frozen=True)
class LevelRecord:
    """One pruning round inside a corner: how many came in, how many survived."""

    level: int
    input_size: int
    survivors: int


def _empty_stats() -> dict[Corner, list[LevelRecord]]:
    return {corner: [] for corner in Corner}


@dataclass
class FilterResult:
    """Retained points plus per-corner recursion statistics."""

    retained: set[Point2]
    per_corner_stats: dict[Corner, list[LevelRecord]] = field(default_factory=_empty_stats)
    total_recursions: int = 0


@dataclass
class ArrayFilterResult:
    """Array-level filter output: unique retained rows, lexicographically sorted."""

    retained: np.ndarray
    per_corner_stats: dict[Corner, list[LevelRecord]]
    total_recursions: int


# Chord endpoints per corner as indices into (top, right, bottom, left); the
# chords run clockwise around the hull so "strictly left" is always outward.
_CHORD = {
    Corner.TR: (0, 1),
    Corner.BR: (1, 2),
    Corner.BL: (2, 3),
    Corner.TL: (3, 0),
}


def _extreme_indices(xs: np.ndarray, ys: np.ndarray) -> tuple[int, int, int, int]:
    # Same tie rules as geometry.find_extremes: top max-y then max-x,
    # right max-x then max-y, bottom min-y then min-x, left min-x then min-y.
    cand = np.flatnonzero(ys == ys.max())
    i_top = cand[np.argmax(xs[cand])]
    cand = np.flatnonzero(xs == xs.max())
    i_right = cand[np.argmax(ys[cand])]
    cand = np.flatnonzero(ys == ys.min())
    i_bottom = cand[np.argmin(xs[cand])]
    cand = np.flatnonzero(xs == xs.min())
    i_left = cand[np.argmin(ys[cand])]
    return int(i_top), int(i_right), int(i_bottom), int(i_left)


def _strictly_left_mask(xs, ys, ax, ay, bx, by, lo_x, lo_y, hi_x, hi_y):
    """Mask of points strictly left of the directed line (ax, ay) -> (bx, by).

    (lo_*, hi_*) bound the coordinates of xs/ys; they yield a single
    conservative error bound for the whole array.  Entries whose cross
    product falls inside the bound are settled exactly, so the mask equals
    the scalar predicate everywhere.
    """
    dx = bx - ax
    dy = by - ay
    det = ys - ay
    det *= dx
    t2 = xs - ax
    t2 *= dy
    det -= t2
    span_y = max(hi_y - ay, ay - lo_y, 0.0)
    span_x = max(hi_x - ax, ax - lo_x, 0.0)
    bound = _ERR_COEFF * _BOUND_SAFETY * (abs(dx) * span_y + abs(dy) * span_x)
    mask = det > bound
    if bound > 0.0:
        np.abs(det, out=t2)
        for i in np.flatnonzero(t2 <= bound):
            mask[i] = cross_sign(ax, ay, bx, by, xs[i], ys[i]) > 0
    return mask


# Below this size a plain Python round beats the fixed cost of the numpy
# one; the classification is identical (cross_sign is the same predicate the
# vectorized mask resolves to).
_SMALL_BRANCH = 96


def _small_rounds(
    cur: list[tuple[float, float]],
    corner: Corner,
    level: int,
    rows: list[tuple[float, float]],
    records: list[LevelRecord],
) -> None:
    """Scalar pruning rounds for small branches; appends into rows/records."""
    ia, ib = _CHORD[corner]
    while True:
        m = len(cur)
        if m <= 2:
            rows.extend(cur)
            return
        level += 1
        tx, ty = rx, ry = bx, by = lx, ly = cur[0]
        for x, y in cur:
            if y > ty or (y == ty and x > tx):
                tx, ty = x, y
            if x > rx or (x == rx and y > ry):
                rx, ry = x, y
            if y < by or (y == by and x < bx):
                bx, by = x, y
            if x < lx or (x == lx and y < ly):
                lx, ly = x, y
        ext = ((tx, ty), (rx, ry), (bx, by), (lx, ly))
        a, b = ext[ia], ext[ib]
        rows.append(a)
        rows.append(b)
        if a == b:
            records.append(LevelRecord(level, m, 0))
            return
        ax, ay = a
        cbx, cby = b
        cur = [p for p in cur if cross_sign(ax, ay, cbx, cby, p[0], p[1]) > 0]
        records.append(LevelRecord(level, m, len(cur)))


def _corner_rounds(
    xs: np.ndarray, ys: np.ndarray, corner: Corner
) -> tuple[list[tuple[float, float]], list[LevelRecord]]:
    """Run the pruning loop for one corner subset; returns retained points and records."""
    ia, ib = _CHORD[corner]
    rows: list[tuple[float, float]] = []
    records: list[LevelRecord] = []
    level = 0
    while True:
        m = len(xs)
        if m <= _SMALL_BRANCH:
            _small_rounds(list(zip(xs.tolist(), ys.tolist())), corner, level, rows, records)
            break
        level += 1
        ext = _extreme_indices(xs, ys)
        i_top, i_right, i_bottom, i_left = ext
        ax, ay = float(xs[ext[ia]]), float(ys[ext[ia]])
        bx, by = float(xs[ext[ib]]), float(ys[ext[ib]])
        rows.append((ax, ay))
        rows.append((bx, by))
        if ax == bx and ay == by:
            # Both chord roles fell on one point, so it attains this corner's
            # extreme in both axes and dominates every other branch point in
            # all directions this corner's hull arc can face.  Keeping it
            # alone is hull-safe; branches like this are routinely large, so
            # retaining them whole would break the logarithmic output size.
            records.append(LevelRecord(level, m, 0))
            break
        mask = _strictly_left_mask(
            xs, ys, ax, ay, bx, by,
            float(xs[i_left]), float(ys[i_bottom]), float(xs[i_right]), float(ys[i_top]),
        )
        xs = xs[mask]
        ys = ys[mask]
        records.append(LevelRecord(level, m, len(xs)))
    return rows, records


def _as_columns(coords: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    coords = np.asarray(coords, dtype=float).reshape(-1, 2)
    if coords.size and not np.isfinite(coords).all():
        raise ValueError("coordinates must be finite")
    return np.ascontiguousarray(coords[:, 0]), np.ascontiguousarray(coords[:, 1])


def _unique_rows(rows: list[tuple[float, float]]) -> np.ndarray:
    if not rows:
        return np.empty((0, 2), dtype=float)
    return np.unique(np.array(rows, dtype=float), axis=0)


def preprocess_array(coords: np.ndarray) -> ArrayFilterResult:
    """Array-level filter; the timed production path.

    coords is an (n, 2) float64 array (duplicates permitted, all finite).
    Retained rows come back deduplicated and lexicographically sorted.
    """
    xs, ys = _as_columns(coords)
    stats = _empty_stats()
    n = len(xs)
    if n <= 3:
        return ArrayFilterResult(_unique_rows(list(zip(xs.tolist(), ys.tolist()))), stats, 0)

    i_top, i_right, i_bottom, i_left = _extreme_indices(xs, ys)
    tx, ty = float(xs[i_top]), float(ys[i_top])
    rx, ry = float(xs[i_right]), float(ys[i_right])
    bx, by = float(xs[i_bottom]), float(ys[i_bottom])
    lx, ly = float(xs[i_left]), float(ys[i_left])
    rows = [(tx, ty), (rx, ry), (bx, by), (lx, ly)]
    chord_pts = {
        Corner.TR: ((tx, ty), (rx, ry)),
        Corner.BR: ((rx, ry), (bx, by)),
        Corner.BL: ((bx, by), (lx, ly)),
        Corner.TL: ((lx, ly), (tx, ty)),
    }

    # Conservative candidate boxes: a point strictly outside a corner's chord
    # must lie strictly beyond both chord endpoints' inner coordinates, so a
    # cheap box test prunes most of the array before the exact side test.
    x_gt_tx = xs > tx
    y_gt_ry = ys > ry
    x_gt_bx = xs > bx
    y_gt_ly = ys > ly
    candidates = {
        Corner.TR: x_gt_tx & y_gt_ry,
        Corner.BR: x_gt_bx & ~y_gt_ry,
        Corner.BL: ~x_gt_bx & ~y_gt_ly,
        Corner.TL: ~x_gt_tx & y_gt_ly,
    }

    for corner in Corner:
        (ax, ay), (cbx, cby) = chord_pts[corner]
        if ax == cbx and ay == cby:
            # Adjacent extremes coincide: the corner region is empty.
            continue
        keep = candidates[corner]
        cand_xs = xs[keep]
        cand_ys = ys[keep]
        mask = _strictly_left_mask(cand_xs, cand_ys, ax, ay, cbx, cby, lx, by, rx, ty)
        more, records = _corner_rounds(cand_xs[mask], cand_ys[mask], corner)
        rows.extend(more)
        stats[corner] = records
    total = sum(len(r) for r in stats.values())
    return ArrayFilterResult(_unique_rows(rows), stats, total)


def preprocess(points: Iterable[Point2]) -> FilterResult:
    """Filter a collection of points, keeping every convex hull vertex.

    Inputs of size <= 3 pass through unchanged (as a set) with no recursion
    records; an empty input yields an empty result rather than an error so
    batch drivers stay total.  The four corner branches are independent and
    evaluated sequentially; the result is a pure function of the input
    multiset regardless of order.
    """
    coords = np.array([(p.x, p.y) for p in points], dtype=float).reshape(-1, 2)
    res = preprocess_array(coords)
    retained = {Point2(x, y) for x, y in res.retained}
    return FilterResult(retained, res.per_corner_stats, res.total_recursions)


def point_selection(subset: Iterable[Point2], corner: Corner, acc: FilterResult) -> FilterResult:
    """Prune one corner subset, folding retained points and stats into acc.

    subset is the strict outward side of a stored chord (or a top-level
    corner subset).  If it has at most two points they are all retained and
    no round is recorded.  When a round's chord endpoints coincide, that
    point dominates the branch in every direction this corner's hull arc can
    face, so it is retained alone and the branch ends.
    """
    coords = np.array([(p.x, p.y) for p in subset], dtype=float).reshape(-1, 2)
    xs, ys = _as_columns(coords)
    rows, records = _corner_rounds(xs, ys, corner)
    acc.retained.update(Point2(x, y) for x, y in rows)
    acc.per_corner_stats[corner].extend(records)
    acc.total_recursions += len(records)
    return acc


def split_regions(
    points: Iterable[Point2], e: Extremes
) -> tuple[list[Point2], list[Point2], list[Point2], list[Point2]]:
    """Split points into the four strict outward subsets of the extreme chords.

    Membership tests are independent: in degenerate configurations a point
    may land in more than one subset, points on or inside every chord land in
    none, and a coincident chord (adjacent extremes equal) yields an empty
    subset.  Chord endpoints are never members of their own subset.
    """
    chords = ((e.top, e.right), (e.right, e.bottom), (e.bottom, e.left), (e.left, e.top))
    subsets: tuple[list[Point2], ...] = ([], [], [], [])
    for out, (a, b) in zip(subsets, chords):
        if a == b:
            continue
        out.extend(p for p in points if is_strictly_above(p, a, b))
    return subsets
