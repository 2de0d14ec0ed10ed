"""Exact decider for the Frechet distance under translation.

Branch-and-bound over translation boxes with a FIFO queue. Each box is first
attacked with two decision calls at its center: the Lipschitz property drops
the box when the center distance exceeds delta plus the half-diagonal, and a
center distance within delta is an immediate witness. Small local
arrangements are resolved exactly by testing a face-covering candidate set;
everything else is halved along the longest edge.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .arrangement import (
    circle_count_cap,
    count_contributing_circles,
    find_yes_candidate,
    size_bound,
)
from .curves import Curve, curve_stats, translate_view
from .frechet import FrechetQueryCounter, decide_frechet
from .geometry import (
    TOL,
    AxisBox,
    Point2,
    Translation,
    disks_intersection_box,
    point_box_min_distance,
)


@dataclass(frozen=True)
class DeciderParams:
    """Thresholds that trigger the arrangement base case."""

    gamma_size: int = 2000
    gamma_depth: int = 30

    def __post_init__(self) -> None:
        if self.gamma_size < 1 or self.gamma_depth < 1:
            raise ValueError("gamma_size and gamma_depth must be >= 1")


@dataclass(frozen=True)
class BoxNode:
    box: AxisBox
    depth: int


@dataclass
class DeciderTrace:
    """Result of one decision query plus its work counters."""

    result: bool
    boxes_processed: int = 0
    boxes_dropped_lower_bound: int = 0
    base_cases: int = 0
    black_box_calls: int = 0
    witness: Translation | None = None


def _endpoint_differences(pi: Curve, sigma: Curve) -> tuple[Point2, Point2]:
    p = Point2(
        float(pi.vertices[0, 0] - sigma.vertices[0, 0]),
        float(pi.vertices[0, 1] - sigma.vertices[0, 1]),
    )
    q = Point2(
        float(pi.vertices[-1, 0] - sigma.vertices[-1, 0]),
        float(pi.vertices[-1, 1] - sigma.vertices[-1, 1]),
    )
    return p, q


def initial_search_box(pi: Curve, sigma: Curve, delta: float) -> AxisBox | None:
    """Bounding box of all feasible translations, or None for a trivial NO.

    A feasible translation must put the first and last vertex of sigma within
    delta of the corresponding vertex of pi, so it lies in the lens of the two
    endpoint disks. The box is further clipped per axis by the requirement
    that every vertex of one curve has a partner within delta on the other,
    applied to the bounding-box extremes of both curves.
    """
    if delta < 0:
        raise ValueError(f"negative delta: {delta}")
    p, q = _endpoint_differences(pi, sigma)
    if p.distance_to(q) > 2.0 * delta:
        return None
    lens = disks_intersection_box(p, q, delta)
    if lens is None:
        return None

    bp = curve_stats(pi).bbox
    bs = curve_stats(sigma).bbox
    # Matching both bbox extremes within delta bounds tau per axis.
    lo_x = min(bp.x_lo - bs.x_lo, bp.x_hi - bs.x_hi)
    hi_x = max(bp.x_lo - bs.x_lo, bp.x_hi - bs.x_hi)
    lo_y = min(bp.y_lo - bs.y_lo, bp.y_hi - bs.y_hi)
    hi_y = max(bp.y_lo - bs.y_lo, bp.y_hi - bs.y_hi)
    if hi_x - delta > lo_x + delta or hi_y - delta > lo_y + delta:
        return None
    clip = AxisBox(hi_x - delta, lo_x + delta, hi_y - delta, lo_y + delta)
    return lens.intersect(clip)


def split_box(box: AxisBox) -> tuple[AxisBox, AxisBox]:
    # Halve along the longest edge; ties split the x axis. Lower half first.
    if box.width >= box.height:
        mid = (box.x_lo + box.x_hi) / 2.0
        return (
            AxisBox(box.x_lo, mid, box.y_lo, box.y_hi),
            AxisBox(mid, box.x_hi, box.y_lo, box.y_hi),
        )
    mid = (box.y_lo + box.y_hi) / 2.0
    return (
        AxisBox(box.x_lo, box.x_hi, box.y_lo, mid),
        AxisBox(box.x_lo, box.x_hi, mid, box.y_hi),
    )


def _clip_to_disks(box: AxisBox, p: Point2, q: Point2, delta: float) -> AxisBox | None:
    # Child boxes may have left the initial lens entirely; re-check.
    for c in (p, q):
        clipped = box.intersect(AxisBox(c.x - delta, c.x + delta, c.y - delta, c.y + delta))
        if clipped is None:
            return None
        box = clipped
    for c in (p, q):
        if point_box_min_distance(c, box) > delta + TOL:
            return None
    return box


def decide_translation(
    pi: Curve,
    sigma: Curve,
    delta: float,
    params: DeciderParams = DeciderParams(),
) -> DeciderTrace:
    """Decide min over translations tau of d_F(pi, sigma + tau) <= delta."""
    if delta < 0:
        raise ValueError(f"negative delta: {delta}")
    counter = FrechetQueryCounter()

    if len(pi) == 1 and len(sigma) == 1:
        # Two single points always align exactly.
        p, _ = _endpoint_differences(pi, sigma)
        return DeciderTrace(result=True, witness=Translation(p.x, p.y))

    root = initial_search_box(pi, sigma, delta)
    if root is None:
        return DeciderTrace(result=False)

    p, q = _endpoint_differences(pi, sigma)
    cap = circle_count_cap(params.gamma_size)
    full_cap = len(pi) * len(sigma) + 1
    queue: deque[BoxNode] = deque([BoxNode(root, 0)])
    trace = DeciderTrace(result=False)

    while queue:
        node = queue.popleft()
        box = node.box
        trace.boxes_processed += 1
        center = box.center
        tau = Translation(center.x, center.y)
        view = translate_view(sigma, tau)

        if not decide_frechet(pi, view, delta + box.diagonal / 2.0, counter):
            trace.boxes_dropped_lower_bound += 1
            continue

        at_depth = node.depth >= params.gamma_depth
        if not at_depth:
            if decide_frechet(pi, view, delta, counter):
                trace.result = True
                trace.witness = tau
                break

        base_loci = None
        if at_depth:
            report = count_contributing_circles(pi, sigma, delta, box, full_cap)
            base_loci = report.loci
        else:
            report = count_contributing_circles(pi, sigma, delta, box, cap)
            if not report.truncated:
                u = size_bound(report.count)
                if u == 0:
                    # Single face, and its representative was just tested.
                    continue
                if u <= params.gamma_size:
                    base_loci = report.loci

        if base_loci is not None:
            trace.base_cases += 1
            witness = find_yes_candidate(pi, sigma, delta, box, base_loci, counter)
            if witness is not None:
                trace.result = True
                trace.witness = witness
                break
            continue

        for child in split_box(box):
            clipped = _clip_to_disks(child, p, q, delta)
            if clipped is not None:
                queue.append(BoxNode(clipped, node.depth + 1))

    trace.black_box_calls = counter.calls
    return trace
