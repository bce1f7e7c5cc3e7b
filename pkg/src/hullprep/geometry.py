"""Planar primitives: points, orientation tests, extreme points, bounding boxes.

The orientation predicate is sign-exact for every finite double input.  A
floating-point cross product is used first; when its magnitude falls below a
static error bound the sign is recomputed with exact rational arithmetic.
In particular the sign is always exact on integer grids with coordinates of
magnitude up to 2**26, which is what the rest of the package relies on for
tie and collinearity handling.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable

__all__ = [
    "Point2",
    "Orientation",
    "Extremes",
    "BoundingBox",
    "DegenerateChordError",
    "orientation",
    "is_strictly_above",
    "find_extremes",
    "bounding_box",
]

# Static filter bound for the double-precision cross product, (3 + 16*eps)*eps
# with eps = 2**-53.  If |det| exceeds _ERR_COEFF times the sum of the two
# product magnitudes, the computed sign is the true sign.
_ERR_COEFF = (3.0 + 16.0 * 2.0**-53) * 2.0**-53


@dataclass(frozen=True, order=True)
class Point2:
    """Immutable planar point with finite float coordinates.

    Ordering is lexicographic on (x, y), which is also the canonical hull
    start-vertex order.
    """

    x: float
    y: float

    def __post_init__(self):
        object.__setattr__(self, "x", float(self.x))
        object.__setattr__(self, "y", float(self.y))
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"non-finite coordinate: ({self.x!r}, {self.y!r})")


class Orientation(Enum):
    """Turn direction of an ordered point triple."""

    COUNTERCLOCKWISE = 1
    CLOCKWISE = -1
    COLLINEAR = 0


@dataclass(frozen=True)
class Extremes:
    """The four extreme points of a set: topmost, rightmost, bottommost, leftmost.

    One physical point may occupy several roles (e.g. a single point is all
    four of its own extremes).
    """

    top: Point2
    right: Point2
    bottom: Point2
    left: Point2


@dataclass(frozen=True)
class BoundingBox:
    """Tight axis-aligned box given by its min and max corners."""

    min_corner: Point2
    max_corner: Point2

    def __post_init__(self):
        if self.min_corner.x > self.max_corner.x or self.min_corner.y > self.max_corner.y:
            raise ValueError(
                f"inverted box: min={self.min_corner}, max={self.max_corner}"
            )

    @property
    def width(self) -> float:
        return self.max_corner.x - self.min_corner.x

    @property
    def height(self) -> float:
        return self.max_corner.y - self.min_corner.y


class DegenerateChordError(ValueError):
    """Raised when a side-of-line test is asked about a zero-length chord."""


def _exact_cross_sign(px, py, qx, qy, rx, ry) -> int:
    # Fraction represents every finite double exactly, so this sign is exact.
    det = (Fraction(qx) - Fraction(px)) * (Fraction(ry) - Fraction(py)) - (
        Fraction(qy) - Fraction(py)
    ) * (Fraction(rx) - Fraction(px))
    if det > 0:
        return 1
    if det < 0:
        return -1
    return 0


def cross_sign(px: float, py: float, qx: float, qy: float, rx: float, ry: float) -> int:
    """Exact sign of (q - p) x (r - p) for finite doubles.

    Evaluation order is fixed: the two products are formed from the four
    coordinate differences and subtracted left to right; when the result is
    too small to be trusted the sign is recomputed with rational arithmetic.
    """
    lhs = (qx - px) * (ry - py)
    rhs = (qy - py) * (rx - px)
    det = lhs - rhs
    bound = _ERR_COEFF * (abs(lhs) + abs(rhs))
    if det > bound:
        return 1
    if det < -bound:
        return -1
    if bound == 0.0:
        # All products were exact zeros; det is exact.
        return 0
    if rx == qx and ry == qy:
        # r coincides with q: collinear by identity.  This keeps repeated
        # chord endpoints off the exact-arithmetic path.
        return 0
    return _exact_cross_sign(px, py, qx, qy, rx, ry)


def orientation(p: Point2, q: Point2, r: Point2) -> Orientation:
    """Turn direction of the triple (p, q, r).

    Counter-clockwise when r lies to the left of the directed line p -> q,
    clockwise to the right, collinear exactly on it.  The sign is exact for
    all finite inputs (see module docstring).
    """
    s = cross_sign(p.x, p.y, q.x, q.y, r.x, r.y)
    if s > 0:
        return Orientation.COUNTERCLOCKWISE
    if s < 0:
        return Orientation.CLOCKWISE
    return Orientation.COLLINEAR


def is_strictly_above(p: Point2, a: Point2, b: Point2) -> bool:
    """True iff p is strictly on the left of the directed line a -> b.

    With chord endpoints given in clockwise hull order (top->right,
    right->bottom, bottom->left, left->top) the left side is the outward
    side: "above" the two upper chords, "below" the two lower ones.  Points
    exactly on the line return False.
    """
    if a == b:
        raise DegenerateChordError(f"coincident chord endpoints: {a}")
    return cross_sign(a.x, a.y, b.x, b.y, p.x, p.y) > 0


def find_extremes(points: Iterable[Point2]) -> Extremes:
    """Locate the four extreme points of a non-empty set.

    Ties are broken deterministically: among topmost points the one with max
    x wins, among rightmost max y, among bottommost min x, among leftmost
    min y.  The result is therefore independent of iteration order.
    """
    it = iter(points)
    try:
        first = next(it)
    except StopIteration:
        raise ValueError("cannot find extremes of an empty point set") from None
    top = right = bottom = left = first
    for p in it:
        if (p.y, p.x) > (top.y, top.x):
            top = p
        if (p.x, p.y) > (right.x, right.y):
            right = p
        if (p.y, p.x) < (bottom.y, bottom.x):
            bottom = p
        if (p.x, p.y) < (left.x, left.y):
            left = p
    return Extremes(top=top, right=right, bottom=bottom, left=left)


def bounding_box(points: Iterable[Point2]) -> BoundingBox:
    """Tight axis-aligned bounding box of a non-empty set."""
    it = iter(points)
    try:
        first = next(it)
    except StopIteration:
        raise ValueError("cannot bound an empty point set") from None
    min_x = max_x = first.x
    min_y = max_y = first.y
    for p in it:
        if p.x < min_x:
            min_x = p.x
        elif p.x > max_x:
            max_x = p.x
        if p.y < min_y:
            min_y = p.y
        elif p.y > max_y:
            max_y = p.y
    return BoundingBox(Point2(min_x, min_y), Point2(max_x, max_y))
