"""Corner-pruning preprocessing for planar convex hulls, with verification tools.

The filter trims a uniform point set down to a handful of candidates while
keeping every convex hull vertex; the rest of the package provides the hull
oracle, seeded point generation, Monte Carlo estimators for the underlying
area identities, and the benchmark CLI.
"""

from .elimination import (
    ArrayFilterResult,
    Corner,
    FilterResult,
    LevelRecord,
    point_selection,
    preprocess,
    preprocess_array,
    split_regions,
)
from .geometry import (
    BoundingBox,
    DegenerateChordError,
    Extremes,
    Orientation,
    Point2,
    bounding_box,
    find_extremes,
    is_strictly_above,
    orientation,
)
from .hull import HullPolygon, contains_point, contains_points, convex_hull, hulls_equal
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

__version__ = "0.1.0"

__all__ = [
    "ArrayFilterResult",
    "BoundingBox",
    "Corner",
    "DegenerateChordError",
    "Extremes",
    "FilterResult",
    "GenSpec",
    "HullPolygon",
    "LevelRecord",
    "Orientation",
    "Point2",
    "PointFormatError",
    "UNIT_SQUARE",
    "bounding_box",
    "contains_point",
    "contains_points",
    "convex_hull",
    "find_extremes",
    "generate",
    "hulls_equal",
    "is_strictly_above",
    "make_rng",
    "orientation",
    "point_selection",
    "preprocess",
    "preprocess_array",
    "read_points",
    "sample_coords",
    "split_regions",
    "write_points",
]
