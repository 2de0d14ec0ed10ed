"""Planar primitives and predicates: points, boxes, circles, annuli.

Everything works in plain double precision with closed-region semantics
(boundaries count as touching). Tangency and containment classification use
an absolute tolerance of 1e-12.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

# Absolute tolerance for tangency / containment classification.
TOL = 1e-12


def _check_finite(**coords: float) -> None:
    for name, value in coords.items():
        if not math.isfinite(value):
            raise ValueError(f"{name} must be finite, got {value!r}")


@dataclass(frozen=True)
class Point2:
    """A point in the plane."""

    x: float
    y: float

    def __post_init__(self) -> None:
        _check_finite(x=self.x, y=self.y)

    def distance_to(self, other: Point2) -> float:
        return math.hypot(self.x - other.x, self.y - other.y)


@dataclass(frozen=True)
class Translation:
    """A displacement of the plane, applied to whole curves."""

    dx: float
    dy: float

    def __post_init__(self) -> None:
        _check_finite(dx=self.dx, dy=self.dy)

    @property
    def norm(self) -> float:
        return math.hypot(self.dx, self.dy)


@dataclass(frozen=True)
class AxisBox:
    """Closed axis-aligned rectangle [x_lo, x_hi] x [y_lo, y_hi]."""

    x_lo: float
    x_hi: float
    y_lo: float
    y_hi: float

    def __post_init__(self) -> None:
        _check_finite(x_lo=self.x_lo, x_hi=self.x_hi, y_lo=self.y_lo, y_hi=self.y_hi)
        if self.x_lo > self.x_hi or self.y_lo > self.y_hi:
            raise ValueError(f"inverted box bounds: {self}")

    @property
    def center(self) -> Point2:
        return Point2((self.x_lo + self.x_hi) / 2.0, (self.y_lo + self.y_hi) / 2.0)

    @property
    def width(self) -> float:
        return self.x_hi - self.x_lo

    @property
    def height(self) -> float:
        return self.y_hi - self.y_lo

    @property
    def diagonal(self) -> float:
        """Length of the box diagonal."""
        return math.hypot(self.width, self.height)

    def contains(self, p: Point2, tol: float = 0.0) -> bool:
        return (
            self.x_lo - tol <= p.x <= self.x_hi + tol
            and self.y_lo - tol <= p.y <= self.y_hi + tol
        )

    def intersect(self, other: AxisBox) -> AxisBox | None:
        x_lo = max(self.x_lo, other.x_lo)
        x_hi = min(self.x_hi, other.x_hi)
        y_lo = max(self.y_lo, other.y_lo)
        y_hi = min(self.y_hi, other.y_hi)
        if x_lo > x_hi or y_lo > y_hi:
            return None
        return AxisBox(x_lo, x_hi, y_lo, y_hi)


@dataclass(frozen=True)
class Circle:
    """A circle boundary (not the disk) of nonnegative radius."""

    center: Point2
    radius: float

    def __post_init__(self) -> None:
        _check_finite(radius=self.radius)
        if self.radius < 0:
            raise ValueError(f"negative radius: {self.radius}")


@dataclass(frozen=True)
class Annulus:
    """The closed ring between two concentric circles."""

    center: Point2
    r_inner: float
    r_outer: float

    def __post_init__(self) -> None:
        _check_finite(r_inner=self.r_inner, r_outer=self.r_outer)
        if not 0 <= self.r_inner <= self.r_outer:
            raise ValueError(f"invalid annulus radii: [{self.r_inner}, {self.r_outer}]")


def point_box_min_distance(p: Point2, b: AxisBox) -> float:
    """Distance from p to the closest point of the closed box (0 if inside)."""
    # sqrt form (not hypot) so vectorized twins reproduce identical floats.
    dx = max(b.x_lo - p.x, 0.0, p.x - b.x_hi)
    dy = max(b.y_lo - p.y, 0.0, p.y - b.y_hi)
    return math.sqrt(dx * dx + dy * dy)


def point_box_max_distance(p: Point2, b: AxisBox) -> float:
    """Distance from p to the farthest point of the box (a corner)."""
    dx = max(abs(p.x - b.x_lo), abs(p.x - b.x_hi))
    dy = max(abs(p.y - b.y_lo), abs(p.y - b.y_hi))
    return math.sqrt(dx * dx + dy * dy)


def circle_circle_intersections(a: Circle, b: Circle) -> list[Point2]:
    """Intersection points of two circle boundaries.

    Returns 0, 1 (tangency) or 2 points. Coincident circles share their whole
    boundary and contribute no isolated vertices, so they yield [].
    """
    ax, ay = a.center.x, a.center.y
    bx, by = b.center.x, b.center.y
    d = math.hypot(bx - ax, by - ay)
    if d <= TOL and abs(a.radius - b.radius) <= TOL:
        return []
    if d > a.radius + b.radius + TOL:
        return []
    if d < abs(a.radius - b.radius) - TOL:
        return []
    if d <= TOL:
        # Concentric with distinct radii; no boundary intersection.
        return []
    ux, uy = (bx - ax) / d, (by - ay) / d
    along = (a.radius * a.radius - b.radius * b.radius + d * d) / (2.0 * d)
    mx, my = ax + along * ux, ay + along * uy
    tangent = (
        abs(d - (a.radius + b.radius)) <= TOL
        or abs(d - abs(a.radius - b.radius)) <= TOL
    )
    if tangent:
        return [Point2(mx, my)]
    h_sq = a.radius * a.radius - along * along
    h = math.sqrt(max(h_sq, 0.0))
    return [
        Point2(mx - h * uy, my + h * ux),
        Point2(mx + h * uy, my - h * ux),
    ]


def circle_box_boundary_intersections(c: Circle, b: AxisBox) -> list[Point2]:
    """Intersection points of the circle boundary with the four box edges."""
    cx, cy, r = c.center.x, c.center.y, c.radius
    hits: list[Point2] = []

    for y_edge in (b.y_lo, b.y_hi):
        disc = r * r - (y_edge - cy) * (y_edge - cy)
        if disc < -TOL:
            continue
        s = math.sqrt(max(disc, 0.0))
        for x in (cx - s, cx + s):
            if b.x_lo - TOL <= x <= b.x_hi + TOL:
                hits.append(Point2(x, y_edge))
    for x_edge in (b.x_lo, b.x_hi):
        disc = r * r - (x_edge - cx) * (x_edge - cx)
        if disc < -TOL:
            continue
        s = math.sqrt(max(disc, 0.0))
        for y in (cy - s, cy + s):
            if b.y_lo - TOL <= y <= b.y_hi + TOL:
                hits.append(Point2(x_edge, y))

    # Tangencies and corner hits produce near-duplicates; keep one of each.
    unique: list[Point2] = []
    for p in hits:
        if all(abs(p.x - q.x) > TOL or abs(p.y - q.y) > TOL for q in unique):
            unique.append(p)
    return unique


def circle_contributes(c: Circle, b: AxisBox) -> bool:
    """True iff the circle boundary meets the closed box.

    Holds when the circle is contained in the box or crosses its boundary;
    false when the circle strictly contains the box or is disjoint from it.
    """
    dmin = point_box_min_distance(c.center, b)
    dmax = point_box_max_distance(c.center, b)
    return dmin <= c.radius + TOL and c.radius <= dmax + TOL


def annulus_intersects_box(a: Annulus, b: AxisBox) -> bool:
    """True iff the closed ring region and the closed box share a point."""
    dmin = point_box_min_distance(a.center, b)
    dmax = point_box_max_distance(a.center, b)
    # The box realizes every center distance in [dmin, dmax].
    return dmin <= a.r_outer + TOL and dmax >= a.r_inner - TOL


def disks_intersection_box(p: Point2, q: Point2, delta: float) -> AxisBox | None:
    """Tight bounding box of the lens D_delta(p) ∩ D_delta(q).

    Returns None when the disks are disjoint (||p-q|| > 2*delta). The lens is
    convex; its per-axis extremes are either axis-extreme points of one disk
    lying inside the other, or circle-circle intersection points.
    """
    if delta < 0:
        raise ValueError(f"negative delta: {delta}")
    if p.distance_to(q) > 2.0 * delta:
        return None

    candidates: list[Point2] = []
    for own, other in ((p, q), (q, p)):
        for ext in (
            Point2(own.x - delta, own.y),
            Point2(own.x + delta, own.y),
            Point2(own.x, own.y - delta),
            Point2(own.x, own.y + delta),
        ):
            if ext.distance_to(other) <= delta + TOL:
                candidates.append(ext)
    candidates.extend(
        circle_circle_intersections(Circle(p, delta), Circle(q, delta))
    )
    if not candidates:
        return None
    xs = [c.x for c in candidates]
    ys = [c.y for c in candidates]
    return AxisBox(min(xs), max(xs), min(ys), max(ys))
