"""Geometry predicate tests: fixed examples plus randomized cross-checks."""

import math
import random

import pytest

from transfrechet import (
    Annulus,
    AxisBox,
    Circle,
    Point2,
    annulus_intersects_box,
    circle_box_boundary_intersections,
    circle_circle_intersections,
    circle_contributes,
    disks_intersection_box,
)
from transfrechet.geometry import point_box_min_distance, point_box_max_distance


def pts_as_set(points, digits=9):
    return {(round(p.x, digits), round(p.y, digits)) for p in points}


class TestCircleCircleIntersections:
    def test_external_tangency_single_point(self):
        got = circle_circle_intersections(
            Circle(Point2(0, 0), 1), Circle(Point2(2, 0), 1)
        )
        assert pts_as_set(got) == {(1.0, 0.0)}

    def test_coincident_circles_no_isolated_vertices(self):
        got = circle_circle_intersections(
            Circle(Point2(0, 0), 1), Circle(Point2(0, 0), 1)
        )
        assert got == []

    def test_unit_circles_offset_one(self):
        got = circle_circle_intersections(
            Circle(Point2(0, 0), 1), Circle(Point2(1, 0), 1)
        )
        r3 = math.sqrt(3) / 2
        assert pts_as_set(got) == {(0.5, round(r3, 9)), (0.5, round(-r3, 9))}

    def test_disjoint_and_nested(self):
        assert circle_circle_intersections(
            Circle(Point2(0, 0), 1), Circle(Point2(5, 0), 1)
        ) == []
        assert circle_circle_intersections(
            Circle(Point2(0, 0), 5), Circle(Point2(0.5, 0), 1)
        ) == []

    def test_points_lie_on_both_circles(self):
        rng = random.Random(7)
        for _ in range(300):
            a = Circle(Point2(rng.uniform(-5, 5), rng.uniform(-5, 5)),
                       rng.uniform(0.1, 4))
            b = Circle(Point2(rng.uniform(-5, 5), rng.uniform(-5, 5)),
                       rng.uniform(0.1, 4))
            for p in circle_circle_intersections(a, b):
                assert p.distance_to(a.center) == pytest.approx(a.radius, rel=1e-9)
                assert p.distance_to(b.center) == pytest.approx(b.radius, rel=1e-9)


class TestCircleBoxBoundaryIntersections:
    def test_circle_strictly_inside_box(self):
        box = AxisBox(-2, 2, -2, 2)
        assert circle_box_boundary_intersections(Circle(Point2(0, 0), 1), box) == []

    def test_edge_through_center(self):
        box = AxisBox(0, 2, -2, 2)
        got = circle_box_boundary_intersections(Circle(Point2(0, 0), 1), box)
        assert pts_as_set(got) == {(0.0, 1.0), (0.0, -1.0)}

    def test_box_strictly_inside_circle(self):
        box = AxisBox(-1, 1, -1, 1)
        assert circle_box_boundary_intersections(Circle(Point2(0, 0), 5), box) == []

    def test_corner_hit_deduplicated(self):
        # circle through the corner (1, 1) of the box, radius sqrt(2)
        box = AxisBox(-1, 1, -1, 1)
        got = circle_box_boundary_intersections(
            Circle(Point2(0, 0), math.sqrt(2)), box
        )
        assert (1.0, 1.0) in pts_as_set(got)
        assert len(got) == len(pts_as_set(got))


def _circle_inside_box(c: Circle, b: AxisBox) -> bool:
    return (
        b.x_lo <= c.center.x - c.radius
        and c.center.x + c.radius <= b.x_hi
        and b.y_lo <= c.center.y - c.radius
        and c.center.y + c.radius <= b.y_hi
    )


class TestCircleContributes:
    def test_contained_in_box(self):
        assert circle_contributes(Circle(Point2(0, 0), 1), AxisBox(-2, 2, -2, 2))

    def test_contains_box_completely(self):
        assert not circle_contributes(Circle(Point2(0, 0), 10), AxisBox(-1, 1, -1, 1))

    def test_disjoint(self):
        assert not circle_contributes(Circle(Point2(5, 0), 1), AxisBox(-1, 1, -1, 1))

    def test_matches_inside_or_boundary_crossing(self):
        rng = random.Random(11)
        for _ in range(500):
            c = Circle(Point2(rng.uniform(-4, 4), rng.uniform(-4, 4)),
                       rng.uniform(0.05, 3))
            x = sorted(rng.uniform(-3, 3) for _ in range(2))
            y = sorted(rng.uniform(-3, 3) for _ in range(2))
            b = AxisBox(x[0], x[1], y[0], y[1])
            expected = _circle_inside_box(c, b) or bool(
                circle_box_boundary_intersections(c, b)
            )
            assert circle_contributes(c, b) == expected


class TestAnnulusIntersectsBox:
    def test_box_inside_ring(self):
        # every point of [1.2, 1.3]^2 has norm in [1.697, 1.839] ⊂ [1, 2]
        a = Annulus(Point2(0, 0), 1, 2)
        assert annulus_intersects_box(a, AxisBox(1.2, 1.3, 1.2, 1.3))

    def test_box_inside_hole(self):
        a = Annulus(Point2(0, 0), 1, 2)
        assert not annulus_intersects_box(a, AxisBox(-0.1, 0.1, -0.1, 0.1))

    def test_disjoint(self):
        a = Annulus(Point2(0, 0), 1, 2)
        assert not annulus_intersects_box(a, AxisBox(10, 11, 10, 11))

    def test_agrees_with_point_sampling(self):
        rng = random.Random(13)
        checked = 0
        for _ in range(300):
            r_in = rng.uniform(0, 2)
            a = Annulus(Point2(rng.uniform(-2, 2), rng.uniform(-2, 2)),
                        r_in, r_in + rng.uniform(0, 2))
            x = sorted(rng.uniform(-3, 3) for _ in range(2))
            y = sorted(rng.uniform(-3, 3) for _ in range(2))
            b = AxisBox(x[0], x[1], y[0], y[1])

            dmin = point_box_min_distance(a.center, b)
            dmax = point_box_max_distance(a.center, b)
            margin = min(
                abs(dmin - a.r_outer), abs(dmax - a.r_inner),
                abs(dmin - a.r_inner), abs(dmax - a.r_outer),
            )
            if margin < 1e-6:
                continue
            sampled = False
            for i in range(100):
                for j in range(100):
                    px = b.x_lo + (b.x_hi - b.x_lo) * i / 99.0
                    py = b.y_lo + (b.y_hi - b.y_lo) * j / 99.0
                    if a.r_inner <= math.hypot(px - a.center.x, py - a.center.y) <= a.r_outer:
                        sampled = True
                        break
                if sampled:
                    break
            assert annulus_intersects_box(a, b) == sampled
            checked += 1
        assert checked > 200


class TestDisksIntersectionBox:
    def test_too_far_apart(self):
        assert disks_intersection_box(Point2(0, 0), Point2(10, 0), 4) is None

    def test_coincident_centers_single_disk(self):
        box = disks_intersection_box(Point2(3, 3), Point2(3, 3), 2)
        assert (box.x_lo, box.x_hi, box.y_lo, box.y_hi) == (1, 5, 1, 5)

    def test_tangent_disks_degenerate_point(self):
        box = disks_intersection_box(Point2(0, 0), Point2(2, 0), 1)
        assert (box.x_lo, box.x_hi) == pytest.approx((1, 1))
        assert (box.y_lo, box.y_hi) == pytest.approx((0, 0))

    def test_contains_all_lens_members(self):
        rng = random.Random(17)
        for _ in range(200):
            p = Point2(rng.uniform(-3, 3), rng.uniform(-3, 3))
            q = Point2(rng.uniform(-3, 3), rng.uniform(-3, 3))
            delta = rng.uniform(0.1, 4)
            box = disks_intersection_box(p, q, delta)
            if p.distance_to(q) > 2 * delta:
                assert box is None
                continue
            for _ in range(40):
                t = Point2(rng.uniform(-7, 7), rng.uniform(-7, 7))
                if t.distance_to(p) <= delta and t.distance_to(q) <= delta:
                    assert box.contains(t, tol=1e-9)


class TestValidation:
    def test_non_finite_rejected(self):
        with pytest.raises(ValueError):
            Point2(float("nan"), 0)
        with pytest.raises(ValueError):
            AxisBox(0, float("inf"), 0, 1)

    def test_inverted_box_rejected(self):
        with pytest.raises(ValueError):
            AxisBox(1, 0, 0, 1)

    def test_negative_radius_rejected(self):
        with pytest.raises(ValueError):
            Circle(Point2(0, 0), -1)
        with pytest.raises(ValueError):
            Annulus(Point2(0, 0), 2, 1)
