"""Approximate value of the Frechet distance under translation.

Three methods over the same primitives:

* lmf_value: best-node-first branch-and-bound with Lipschitz bounds and a
  local-arrangement binary-search base case (the main algorithm).
* binary_search_value: bisection of the distance via the exact decider.
* lipschitz_only_value: the branch-and-bound alone, no arrangement base case.

All return an additive epsilon-approximation. Internal refinements run at
epsilon/2 so that the additive skip rule (global upper bound within epsilon
of a box lower bound) still terminates on boxes around the optimum.
"""

from __future__ import annotations

import heapq
import time
from dataclasses import dataclass, field

from .arrangement import (
    DifferenceIndex,
    TestDistanceInterval,
    circle_count_cap,
    count_contributing_annuli,
    find_yes_candidate,
    size_bound,
)
from .curves import Curve, translate_view
from .decider import DeciderParams, decide_translation, initial_search_box, split_box
from .frechet import (
    FrechetQueryCounter,
    decide_frechet,
    frechet_value_search,
    traversal_width_bound,
)
from .geometry import AxisBox, Translation


@dataclass(frozen=True)
class ValueParams:
    """Targets and thresholds for value computation."""

    epsilon: float = 1e-7
    gamma_size: int = 2000
    gamma_depth: int = 30
    coarse_factor: float = 0.125

    def __post_init__(self) -> None:
        if self.epsilon <= 0:
            raise ValueError("epsilon must be positive")
        if self.gamma_size < 1 or self.gamma_depth < 1:
            raise ValueError("gamma_size and gamma_depth must be >= 1")
        if self.coarse_factor <= 0:
            raise ValueError("coarse_factor must be positive")

    def decider_params(self) -> DeciderParams:
        return DeciderParams(self.gamma_size, self.gamma_depth)


@dataclass(order=True)
class PrioritizedBox:
    """Heap entry: a search box keyed by its local lower bound."""

    lower_bound: float
    depth: int
    seq: int
    box: AxisBox = field(compare=False)


@dataclass
class ValueTrace:
    """Computed value plus work counters and per-phase timings."""

    value: float
    black_box_calls: int = 0
    boxes_processed: int = 0
    base_cases: int = 0
    timings_ms: dict = field(default_factory=dict)
    debug_log: list = field(default_factory=list)


def initial_estimates(
    pi: Curve,
    sigma: Curve,
    counter: FrechetQueryCounter,
    tol: float = 1e-7,
) -> TestDistanceInterval:
    """Interval bracketing the optimum from the two endpoint alignments.

    Aligning the first (or last) vertices gives a 2-approximation, so the
    optimum lies in [max(d_start, d_end)/2, min(d_start, d_end)]. Both
    distances are evaluated to tol; the lower end is padded by tol so the
    containment survives the inexact evaluation.
    """
    values = []
    for pick in (0, -1):
        shift = Translation(
            float(pi.vertices[pick, 0] - sigma.vertices[pick, 0]),
            float(pi.vertices[pick, 1] - sigma.vertices[pick, 1]),
        )
        view = translate_view(sigma, shift)
        hi = traversal_width_bound(pi, view)
        values.append(
            frechet_value_search(pi, view, 0.0, hi, tol, counter, check_bracket=False)
        )
    d_start, d_end = values
    ub = min(d_start, d_end)
    lb = max(0.0, (max(d_start, d_end) - tol) / 2.0)
    lb = min(lb, ub)  # guard against an ulp of rounding in the halving
    return TestDistanceInterval(lb, ub)


def _base_case_search(pi, sigma, box, loci, lo, hi, tol, counter) -> float:
    # Binary search over the local arrangement decision on [lo, hi]. The
    # annulus loci are valid for every probed distance in the interval.
    # Testing near the previous witness first makes YES probes cheap.
    witness = find_yes_candidate(pi, sigma, hi, box, loci, counter)
    if witness is None:
        return hi
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        found = find_yes_candidate(pi, sigma, mid, box, loci, counter, near=witness)
        if found is not None:
            hi = mid
            witness = found
        else:
            lo = mid
    return hi


def _branch_and_bound_value(
    pi: Curve,
    sigma: Curve,
    params: ValueParams,
    use_arrangement: bool,
    debug: bool = False,
) -> ValueTrace:
    eps = params.epsilon
    refine_tol = eps / 2.0
    counter = FrechetQueryCounter()
    trace = ValueTrace(value=0.0)

    t0 = time.perf_counter()
    index = DifferenceIndex(pi, sigma) if use_arrangement else None
    t1 = time.perf_counter()
    interval = initial_estimates(pi, sigma, counter, tol=refine_tol)
    t2 = time.perf_counter()

    delta_ub = interval.ub
    root = initial_search_box(pi, sigma, interval.ub)
    heap: list[PrioritizedBox] = []
    seq = 0
    if root is not None:
        heapq.heappush(heap, PrioritizedBox(interval.lb, 0, seq, root))
    cap = circle_count_cap(params.gamma_size)
    full_cap = len(pi) * len(sigma) + 1

    while heap:
        entry = heapq.heappop(heap)
        lb, depth, box = entry.lower_bound, entry.depth, entry.box
        trace.boxes_processed += 1
        if debug:
            trace.debug_log.append((lb, delta_ub))
        if delta_ub <= lb + eps:
            continue

        center = box.center
        tau = Translation(center.x, center.y)
        view = translate_view(sigma, tau)
        half_diag = box.diagonal / 2.0

        if decide_frechet(pi, view, delta_ub, counter):
            value = frechet_value_search(
                pi, view, lb, delta_ub, refine_tol, counter, check_bracket=False
            )
            delta_ub = min(delta_ub, value)
            lb = max(lb, value - refine_tol - half_diag)
        else:
            if not decide_frechet(pi, view, delta_ub + half_diag, counter):
                continue
            coarse_tol = max(refine_tol, params.coarse_factor * box.diagonal)
            value = frechet_value_search(
                pi,
                view,
                delta_ub,
                delta_ub + half_diag,
                coarse_tol,
                counter,
                check_bracket=False,
            )
            lb = max(lb, value - coarse_tol - half_diag)
        lb = max(lb, 0.0)

        if delta_ub <= lb + eps:
            continue

        if use_arrangement:
            test_interval = TestDistanceInterval(lb, max(lb, delta_ub))
            base_loci = None
            if depth >= params.gamma_depth:
                report = count_contributing_annuli(index, test_interval, box, full_cap)
                base_loci = report.loci
            else:
                report = count_contributing_annuli(index, test_interval, box, cap)
                if not report.truncated:
                    u = size_bound(report.count)
                    if u == 0:
                        # Decision uniform on the box for the whole interval
                        # and the center was just evaluated.
                        continue
                    if u <= params.gamma_size:
                        base_loci = report.loci
            if base_loci is not None:
                trace.base_cases += 1
                delta_ub = _base_case_search(
                    pi, sigma, box, base_loci, lb, delta_ub, refine_tol, counter
                )
                continue

        for child in split_box(box):
            seq += 1
            heapq.heappush(heap, PrioritizedBox(lb, depth + 1, seq, child))

    t3 = time.perf_counter()
    trace.value = delta_ub
    trace.black_box_calls = counter.calls
    trace.timings_ms = {
        "preprocess": (t1 - t0) * 1000.0,
        "estimates": (t2 - t1) * 1000.0,
        "search": (t3 - t2) * 1000.0,
    }
    return trace


def lmf_value(
    pi: Curve,
    sigma: Curve,
    params: ValueParams = ValueParams(),
    debug: bool = False,
) -> ValueTrace:
    """Lipschitz branch-and-bound with the arrangement base case."""
    return _branch_and_bound_value(pi, sigma, params, use_arrangement=True, debug=debug)


def lipschitz_only_value(
    pi: Curve,
    sigma: Curve,
    params: ValueParams = ValueParams(),
    debug: bool = False,
) -> ValueTrace:
    """Pure Lipschitz branch-and-bound; boxes die only by the skip rule."""
    return _branch_and_bound_value(pi, sigma, params, use_arrangement=False, debug=debug)


def binary_search_value(
    pi: Curve,
    sigma: Curve,
    params: ValueParams = ValueParams(),
) -> ValueTrace:
    """Bisection over the exact translation decider."""
    eps = params.epsilon
    counter = FrechetQueryCounter()
    trace = ValueTrace(value=0.0)
    dparams = params.decider_params()

    t0 = time.perf_counter()
    interval = initial_estimates(pi, sigma, counter, tol=eps / 2.0)
    t1 = time.perf_counter()

    lo, hi = interval.lb, interval.ub
    calls = counter.calls
    while hi - lo > eps:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        sub = decide_translation(pi, sigma, mid, dparams)
        calls += sub.black_box_calls
        trace.boxes_processed += sub.boxes_processed
        trace.base_cases += sub.base_cases
        if sub.result:
            hi = mid
        else:
            lo = mid
    t2 = time.perf_counter()

    trace.value = 0.5 * (lo + hi)
    trace.black_box_calls = calls
    trace.timings_ms = {
        "estimates": (t1 - t0) * 1000.0,
        "search": (t2 - t1) * 1000.0,
    }
    return trace
