import random

import numpy as np
import pytest

from hullprep.geometry import Point2
from hullprep.hull import HullPolygon, contains_point, contains_points, convex_hull, hulls_equal
from oracle_utils import brute_hull_vertices


def test_square_with_interior_point():
    pts = [Point2(0, 0), Point2(2, 0), Point2(2, 2), Point2(0, 2), Point2(1, 1)]
    h = convex_hull(pts)
    assert h.vertices == (Point2(0, 0), Point2(2, 0), Point2(2, 2), Point2(0, 2))


def test_collinear_input_degenerates_to_segment():
    h = convex_hull([Point2(0, 0), Point2(1, 1), Point2(2, 2)])
    assert h.vertices == (Point2(0, 0), Point2(2, 2))


def test_five_point_example():
    pts = [Point2(0, 0), Point2(4, 1), Point2(2, 5), Point2(-1, 2), Point2(1, 2)]
    h = convex_hull(pts)
    assert h.vertices == (Point2(-1, 2), Point2(0, 0), Point2(4, 1), Point2(2, 5))


def test_single_point_and_duplicates():
    assert convex_hull([Point2(3, 4)]).vertices == (Point2(3, 4),)
    assert convex_hull([Point2(3, 4)] * 5).vertices == (Point2(3, 4),)


def test_empty_rejected():
    with pytest.raises(ValueError):
        convex_hull([])


def test_collinear_boundary_points_are_not_vertices():
    pts = [Point2(0, 0), Point2(1, 0), Point2(2, 0), Point2(2, 2), Point2(0, 2)]
    h = convex_hull(pts)
    assert Point2(1, 0) not in h.vertices


def test_hulls_equal_examples():
    square = [Point2(0, 0), Point2(1, 0), Point2(1, 1), Point2(0, 1)]
    assert hulls_equal(convex_hull(square), convex_hull(square + [Point2(0.5, 0.5)]))
    tri = [Point2(0, 0), Point2(1, 0), Point2(0, 1)]
    assert not hulls_equal(convex_hull(tri), convex_hull(tri + [Point2(1, 1)]))


def test_idempotence():
    rng = random.Random(7)
    for _ in range(50):
        pts = [Point2(rng.uniform(0, 1), rng.uniform(0, 1)) for _ in range(40)]
        h = convex_hull(pts)
        assert hulls_equal(h, convex_hull(h.vertices))


def test_hull_contains_all_source_points():
    rng = random.Random(8)
    for _ in range(30):
        pts = [Point2(rng.uniform(-3, 3), rng.uniform(-3, 3)) for _ in range(60)]
        h = convex_hull(pts)
        assert all(contains_point(h, p) for p in pts)


def test_brute_force_equivalence_small_sets():
    # The full 10^4-set sweep lives in the acceptance suite.
    rng = random.Random(123)
    for trial in range(500):
        k = rng.randint(1, 8)
        if trial % 2:
            pts = [Point2(rng.randint(0, 4), rng.randint(0, 4)) for _ in range(k)]
        else:
            pts = [Point2(rng.uniform(0, 1), rng.uniform(0, 1)) for _ in range(k)]
        assert set(convex_hull(pts).vertices) == brute_hull_vertices(pts)


def test_contains_point_square_cases():
    square = convex_hull([Point2(0, 0), Point2(1, 0), Point2(1, 1), Point2(0, 1)])
    assert contains_point(square, Point2(0.5, 0.5))
    assert not contains_point(square, Point2(1.5, 0.5))
    assert contains_point(square, Point2(1.0, 0.5))  # boundary counts


def test_contains_point_degenerate_hulls():
    seg = convex_hull([Point2(0, 0), Point2(2, 2)])
    assert contains_point(seg, Point2(1, 1))
    assert not contains_point(seg, Point2(3, 3))
    assert not contains_point(seg, Point2(1, 0))
    dot = convex_hull([Point2(5, 5)])
    assert contains_point(dot, Point2(5, 5))
    assert not contains_point(dot, Point2(5, 6))


def test_contains_points_matches_scalar():
    rng = np.random.Generator(np.random.PCG64(17))
    polys = [
        convex_hull([Point2(0, 0), Point2(1, 0), Point2(1, 1), Point2(0, 1)]),
        convex_hull([Point2(0, 0), Point2(4, 1), Point2(2, 5), Point2(-1, 2)]),
        convex_hull([Point2(0, 0), Point2(2, 2)]),
        convex_hull([Point2(0.5, 0.5)]),
    ]
    grid = [(x / 4, y / 4) for x in range(-2, 7) for y in range(-2, 7)]
    randoms = rng.uniform(-1, 2, size=(100, 2)).tolist()
    for h in polys:
        pts = grid + randoms
        xs = np.array([p[0] for p in pts])
        ys = np.array([p[1] for p in pts])
        bulk = contains_points(h, xs, ys)
        for i, (x, y) in enumerate(pts):
            assert bulk[i] == contains_point(h, Point2(x, y))


def test_polygon_validation():
    with pytest.raises(ValueError):
        HullPolygon(())
    with pytest.raises(ValueError):  # duplicate vertices
        HullPolygon((Point2(0, 0), Point2(1, 0), Point2(0, 0)))
    with pytest.raises(ValueError):  # wrong start vertex
        HullPolygon((Point2(1, 0), Point2(0, 0), Point2(1, 1)))
    with pytest.raises(ValueError):  # clockwise order
        HullPolygon((Point2(0, 0), Point2(0, 1), Point2(1, 0)))
    with pytest.raises(ValueError):  # collinear triple
        HullPolygon((Point2(0, 0), Point2(1, 0), Point2(2, 0), Point2(1, 1)))
