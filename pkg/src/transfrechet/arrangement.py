"""Local arrangement machinery for the translation search.

The translation plane is partitioned by the circles of radius delta around
the difference points pi_i - sigma_j; the fixed-translation decision is
uniform per face of that arrangement. This module counts the loci that
contribute to a search box, bounds the local arrangement size, generates a
face-covering candidate set, and decides a box by testing the candidates.

No topological arrangement is built. Candidates are the arrangement vertices
(circle-circle and circle-box intersections), the box center and corners, and
per-circle horizontal stabbing midpoints, which together put at least one
testable point into (the closure of) every face meeting the box.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .curves import Curve
from .frechet import FrechetQueryCounter, decide_frechet_batch
from .geometry import (
    TOL,
    Annulus,
    AxisBox,
    Circle,
    Point2,
    Translation,
    annulus_intersects_box,
    circle_box_boundary_intersections,
    circle_circle_intersections,
)

# Candidates closer than this are treated as one test translation.
DEDUP_TOL = 1e-9

# Arrangement vertices lie at distance exactly delta from their defining
# loci, so the decision there is a float coin flip. Each vertex therefore
# also spawns a copy nudged into the lens interior, where the comparison
# has real slack.
NUDGE_FACTOR = 1e-8


@dataclass(frozen=True)
class TestDistanceInterval:
    """Interval [lb, ub] of decision distances a base case must cover."""

    __test__ = False  # not a pytest class despite the name

    lb: float
    ub: float

    def __post_init__(self) -> None:
        if not 0 <= self.lb <= self.ub:
            raise ValueError(f"invalid test distance interval: [{self.lb}, {self.ub}]")


@dataclass(frozen=True)
class ContributionReport:
    """Outcome of counting the loci whose circles/annuli meet a box."""

    count: int
    loci: tuple[Point2, ...]
    truncated: bool


def size_bound(c: int) -> int:
    """Upper bound 2(c + c^2) on the local arrangement size for c loci."""
    if c < 0:
        raise ValueError(f"negative count: {c}")
    return 2 * (c + c * c)


def circle_count_cap(gamma_size: int) -> int:
    """Smallest locus count whose size bound already exceeds gamma_size."""
    c = int((math.sqrt(1.0 + 2.0 * gamma_size) - 1.0) / 2.0)
    c = max(c - 2, 0)
    while size_bound(c + 1) <= gamma_size:
        c += 1
    return c + 1


def difference_points(pi: Curve, sigma: Curve) -> np.ndarray:
    """All nm difference points pi_i - sigma_j, i-major order."""
    return (pi.vertices[:, None, :] - sigma.vertices[None, :, :]).reshape(-1, 2)


def _box_distance_bounds(pts: np.ndarray, box: AxisBox):
    # Same formulas as point_box_min/max_distance, elementwise.
    xs = pts[:, 0]
    ys = pts[:, 1]
    dx = np.maximum(np.maximum(box.x_lo - xs, 0.0), xs - box.x_hi)
    dy = np.maximum(np.maximum(box.y_lo - ys, 0.0), ys - box.y_hi)
    dmin = np.sqrt(dx * dx + dy * dy)
    dx = np.maximum(np.abs(xs - box.x_lo), np.abs(xs - box.x_hi))
    dy = np.maximum(np.abs(ys - box.y_lo), np.abs(ys - box.y_hi))
    dmax = np.sqrt(dx * dx + dy * dy)
    return dmin, dmax


def count_contributing_circles(
    pi: Curve,
    sigma: Curve,
    delta: float,
    box: AxisBox,
    cap: int,
) -> ContributionReport:
    """Count difference points whose delta-circle meets the box.

    Stops at cap: a truncated report carries count == cap and no loci.
    """
    if delta < 0:
        raise ValueError(f"negative delta: {delta}")
    if cap <= 0:
        raise ValueError(f"nonpositive cap: {cap}")
    pts = difference_points(pi, sigma)
    dmin, dmax = _box_distance_bounds(pts, box)
    mask = (dmin <= delta + TOL) & (delta <= dmax + TOL)
    hits = np.flatnonzero(mask)
    if hits.size >= cap:
        return ContributionReport(count=cap, loci=(), truncated=True)
    loci = tuple(Point2(float(pts[k, 0]), float(pts[k, 1])) for k in hits)
    return ContributionReport(count=len(loci), loci=loci, truncated=False)


class _KdNode:
    __slots__ = ("x", "y", "tag", "axis", "left", "right")

    def __init__(self, x, y, tag, axis, left, right):
        self.x = x
        self.y = y
        self.tag = tag
        self.axis = axis
        self.left = left
        self.right = right


class DifferenceIndex:
    """Static median-split kd-tree over the nm difference points.

    Each point carries its (i, j) vertex-pair tag; the tree is immutable
    after construction and shareable across queries.
    """

    __slots__ = ("root", "size")

    def __init__(self, pi: Curve, sigma: Curve) -> None:
        pts = difference_points(pi, sigma)
        m = len(sigma)
        tags = [(k // m, k % m) for k in range(pts.shape[0])]
        order = list(range(pts.shape[0]))
        self.size = pts.shape[0]
        self.root = self._build(pts, tags, order, depth=0)

    def _build(self, pts, tags, order, depth):
        if not order:
            return None
        axis = depth % 2
        order.sort(key=lambda k: pts[k, axis])
        mid = len(order) // 2
        k = order[mid]
        return _KdNode(
            float(pts[k, 0]),
            float(pts[k, 1]),
            tags[k],
            axis,
            self._build(pts, tags, order[:mid], depth + 1),
            self._build(pts, tags, order[mid + 1 :], depth + 1),
        )

    def points_in_annulus(self, cx: float, cy: float, r_lo: float, r_hi: float):
        """Yield (Point2, tag) for stored points with center distance in [r_lo, r_hi]."""
        stack = [(self.root, -math.inf, math.inf, -math.inf, math.inf)]
        while stack:
            node, x_lo, x_hi, y_lo, y_hi = stack.pop()
            if node is None:
                continue
            dx = max(x_lo - cx, 0.0, cx - x_hi)
            dy = max(y_lo - cy, 0.0, cy - y_hi)
            if math.sqrt(dx * dx + dy * dy) > r_hi:
                continue
            dx = max(abs(cx - x_lo), abs(cx - x_hi))
            dy = max(abs(cy - y_lo), abs(cy - y_hi))
            if math.sqrt(dx * dx + dy * dy) < r_lo:
                continue
            dist = math.hypot(node.x - cx, node.y - cy)
            if r_lo <= dist <= r_hi:
                yield Point2(node.x, node.y), node.tag
            if node.axis == 0:
                stack.append((node.left, x_lo, node.x, y_lo, y_hi))
                stack.append((node.right, node.x, x_hi, y_lo, y_hi))
            else:
                stack.append((node.left, x_lo, x_hi, y_lo, node.y))
                stack.append((node.right, x_lo, x_hi, node.y, y_hi))


def count_contributing_annuli(
    index: DifferenceIndex,
    interval: TestDistanceInterval,
    box: AxisBox,
    cap: int,
) -> ContributionReport:
    """Difference points whose annulus D_ub \\ D_lb meets the box.

    The kd-tree is pruned with a permissive annulus around the box center
    (the interval widened by the half-diagonal); survivors are confirmed with
    the exact annulus-box test. Stops at cap like the circle count.
    """
    if cap <= 0:
        raise ValueError(f"nonpositive cap: {cap}")
    center = box.center
    half_diag = box.diagonal / 2.0
    r_lo = max(0.0, interval.lb - half_diag - TOL)
    r_hi = interval.ub + half_diag + TOL
    loci: list[Point2] = []
    for point, _tag in index.points_in_annulus(center.x, center.y, r_lo, r_hi):
        if annulus_intersects_box(Annulus(point, interval.lb, interval.ub), box):
            loci.append(point)
            if len(loci) >= cap:
                return ContributionReport(count=cap, loci=(), truncated=True)
    return ContributionReport(count=len(loci), loci=tuple(loci), truncated=False)


def candidate_translations(
    loci: list[Point2] | tuple[Point2, ...],
    delta: float,
    box: AxisBox,
) -> list[Translation]:
    """Deduplicated test translations covering every face meeting the box.

    Combines (a) pairwise circle-circle intersections, (b) circle-box-edge
    intersections, (c) the box center and corners, and (d) midpoints of
    consecutive crossings along the horizontal line through each circle
    center, clipped to the box. Crossings in (d) keep their multiplicity, so
    degenerate circles (radius 0, coincident duplicates) stab their own
    center and extreme points. Circle-circle vertices additionally spawn an
    inward-nudged copy so the decision at lens faces does not hinge on an
    exact boundary comparison.
    """
    raw: list[tuple[float, float]] = []
    center = box.center
    raw.append((center.x, center.y))
    raw.append((box.x_lo, box.y_lo))
    raw.append((box.x_lo, box.y_hi))
    raw.append((box.x_hi, box.y_lo))
    raw.append((box.x_hi, box.y_hi))

    nudge = NUDGE_FACTOR * (1.0 + delta)
    circles = [Circle(p, delta) for p in loci]
    for a in range(len(circles)):
        for b in range(a + 1, len(circles)):
            ca, cb = circles[a].center, circles[b].center
            for p in circle_circle_intersections(circles[a], circles[b]):
                raw.append((p.x, p.y))
                if delta <= TOL:
                    continue
                # Nudge into the lens: inward along both circle normals.
                dx = (ca.x - p.x) + (cb.x - p.x)
                dy = (ca.y - p.y) + (cb.y - p.y)
                norm = math.hypot(dx, dy)
                if norm > TOL:
                    raw.append((p.x + nudge * dx / norm, p.y + nudge * dy / norm))
    for c in circles:
        for p in circle_box_boundary_intersections(c, box):
            raw.append((p.x, p.y))

    for c in circles:
        cy = c.center.y
        if not box.y_lo - TOL <= cy <= box.y_hi + TOL:
            continue
        xs = [box.x_lo, box.x_hi]
        for other in circles:
            dy = cy - other.center.y
            disc = other.radius * other.radius - dy * dy
            if disc < -TOL:
                continue
            s = math.sqrt(max(disc, 0.0))
            for x in (other.center.x - s, other.center.x + s):
                if box.x_lo - TOL <= x <= box.x_hi + TOL:
                    xs.append(x)
        xs.sort()
        for a, b in zip(xs, xs[1:]):
            raw.append(((a + b) / 2.0, cy))

    seen: set[tuple[int, int]] = set()
    out: list[Translation] = []
    for x, y in raw:
        key = (int(round(x / DEDUP_TOL)), int(round(y / DEDUP_TOL)))
        if key not in seen:
            seen.add(key)
            out.append(Translation(x, y))
    return out


def find_yes_candidate(
    pi: Curve,
    sigma: Curve,
    delta: float,
    box: AxisBox,
    loci,
    counter: FrechetQueryCounter,
    near: Translation | None = None,
) -> Translation | None:
    """First candidate translation that passes the fixed-translation decision.

    Candidates are scanned with early exit and the counter advances by the
    number of tests performed. When a previous witness is supplied via
    `near`, candidates are tested closest-first around it, which lets probes
    just above a known feasible distance terminate after a few tests.
    """
    cands = candidate_translations(loci, delta, box)
    if near is not None and len(cands) > 2:
        cands.sort(key=lambda t: (t.dx - near.dx) ** 2 + (t.dy - near.dy) ** 2)
    T = np.array([(t.dx, t.dy) for t in cands]).reshape(-1, 2)
    chunk = 64
    for start in range(0, len(cands), chunk):
        stop = min(start + chunk, len(cands))
        verdicts = decide_frechet_batch(pi, sigma, T[start:stop], delta)
        hits = np.flatnonzero(verdicts)
        if hits.size:
            first = start + int(hits[0])
            counter.calls += first + 1
            return cands[first]
    counter.calls += len(cands)
    return None


def local_arrangement_decide(
    pi: Curve,
    sigma: Curve,
    delta: float,
    box: AxisBox,
    loci,
    counter: FrechetQueryCounter,
) -> bool:
    """Decide whether some translation in the box reaches distance delta.

    True when any candidate passes; because the candidates cover every face
    meeting the box and the decision is uniform per face, False certifies
    that no translation in the box works. Candidates outside the box only
    ever strengthen YES detection (their witnesses are verified).
    """
    return find_yes_candidate(pi, sigma, delta, box, loci, counter) is not None
