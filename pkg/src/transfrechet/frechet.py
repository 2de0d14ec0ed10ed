"""Fixed-translation discrete Frechet distance: decision black box and value.

The decision procedure is the O(nm) reachability dynamic program over the
free-space grid, processed row by row. Reachable cells of a row are
propagated as runs of consecutive free cells, which vectorizes cleanly and
allows an early exit as soon as a row has no reachable cell.
"""

from __future__ import annotations

import math

import numpy as np

from .curves import Curve, TranslatedView


class FrechetQueryCounter:
    """Counts invocations of the fixed-translation decision procedure."""

    __slots__ = ("calls",)

    def __init__(self) -> None:
        self.calls = 0

    def __repr__(self) -> str:
        return f"FrechetQueryCounter(calls={self.calls})"


class BracketError(ValueError):
    """A value search was started with an upper bracket below the distance."""


def _sq(a: float, b: float) -> float:
    return a * a + b * b


def decide_frechet(
    pi: Curve,
    sigma_view: TranslatedView,
    delta: float,
    counter: FrechetQueryCounter,
) -> bool:
    """Decide d_F(pi, sigma + tau) <= delta for the translation of the view.

    Counts as one black-box call. Returns False without building the DP table
    when either endpoint pair is already farther apart than delta.
    """
    if delta < 0:
        raise ValueError(f"negative delta: {delta}")
    counter.calls += 1

    P = pi.vertices
    base = sigma_view.base.vertices
    tdx = sigma_view.shift.dx
    tdy = sigma_view.shift.dy
    d2 = delta * delta

    if _sq(P[0, 0] - (base[0, 0] + tdx), P[0, 1] - (base[0, 1] + tdy)) > d2:
        return False
    if _sq(P[-1, 0] - (base[-1, 0] + tdx), P[-1, 1] - (base[-1, 1] + tdy)) > d2:
        return False

    n = P.shape[0]
    m = base.shape[0]
    if n * m <= 192:
        return _decide_scalar(P, sigma_view.vertices, d2)

    S = sigma_view.vertices
    sx = S[:, 0]
    sy = S[:, 1]
    idx = np.arange(m)

    prev = None
    for i in range(n):
        dx = sx - P[i, 0]
        dy = sy - P[i, 1]
        free = dx * dx + dy * dy <= d2
        if i == 0:
            reach = np.logical_and.accumulate(free)
        else:
            # A cell is reachable iff its free run contains a seed: a free
            # cell whose predecessor row is reachable at j or j-1.
            seed = free.copy()
            seed[0] &= prev[0]
            seed[1:] &= prev[1:] | prev[:-1]
            last_seed = np.maximum.accumulate(np.where(seed, idx, -1))
            last_block = np.maximum.accumulate(np.where(~free, idx, -1))
            reach = last_seed > last_block
        if not reach.any():
            return False
        prev = reach
    return bool(prev[-1])


def _decide_scalar(P, S, d2):
    # Plain-loop variant of the row DP; numpy dispatch dominates at tiny
    # sizes. Performs the same float operations as the vectorized path.
    n = P.shape[0]
    m = S.shape[0]
    pts = P.tolist()
    sx = S[:, 0].tolist()
    sy = S[:, 1].tolist()

    prev = None
    for i in range(n):
        px, py = pts[i]
        curr = [False] * m
        alive = False
        if i == 0:
            for j in range(m):
                dx = sx[j] - px
                dy = sy[j] - py
                if dx * dx + dy * dy <= d2:
                    curr[j] = True
                    alive = True
                else:
                    break
        else:
            left = False
            for j in range(m):
                dx = sx[j] - px
                dy = sy[j] - py
                if dx * dx + dy * dy <= d2 and (
                    left or prev[j] or (j > 0 and prev[j - 1])
                ):
                    curr[j] = True
                    alive = True
                    left = True
                else:
                    left = False
        if not alive:
            return False
        prev = curr
    return prev[-1]


def decide_frechet_batch(
    pi: Curve,
    sigma: Curve,
    translations: np.ndarray,
    delta: float,
) -> np.ndarray:
    """Vectorized decide_frechet over a (k, 2) array of translations.

    Performs the same floating-point comparisons as decide_frechet, so the
    returned boolean array matches k individual calls exactly. Black-box call
    accounting is the caller's responsibility.
    """
    if delta < 0:
        raise ValueError(f"negative delta: {delta}")
    T = np.asarray(translations, dtype=np.float64)
    k = T.shape[0]
    if k == 0:
        return np.zeros(0, dtype=bool)

    P = pi.vertices
    base = sigma.vertices
    d2 = delta * delta
    n = P.shape[0]
    m = base.shape[0]
    # Shift first, then subtract, mirroring the arithmetic of the view path.
    sx = base[None, :, 0] + T[:, None, 0]
    sy = base[None, :, 1] + T[:, None, 1]
    idx = np.arange(m)[None, :]

    alive = np.ones(k, dtype=bool)
    prev = None
    for i in range(n):
        dx = sx - P[i, 0]
        dy = sy - P[i, 1]
        free = dx * dx + dy * dy <= d2
        if i == 0:
            reach = np.logical_and.accumulate(free, axis=1)
        else:
            seed = free.copy()
            seed[:, 0] &= prev[:, 0]
            seed[:, 1:] &= prev[:, 1:] | prev[:, :-1]
            last_seed = np.maximum.accumulate(np.where(seed, idx, -1), axis=1)
            last_block = np.maximum.accumulate(np.where(~free, idx, -1), axis=1)
            reach = last_seed > last_block
        alive &= reach.any(axis=1)
        if not alive.any():
            return np.zeros(k, dtype=bool)
        prev = reach
    return alive & prev[:, -1]


def frechet_value_exact(pi: Curve, sigma_view: TranslatedView) -> float:
    """Exact discrete Frechet distance via the min-max dynamic program.

    v[i][j] = max(d(i,j), min(v[i-1][j], v[i][j-1], v[i-1][j-1])), computed on
    squared distances; result is exact up to the final square root.
    """
    P = pi.vertices
    S = sigma_view.vertices
    n = P.shape[0]
    m = S.shape[0]
    sx = S[:, 0]
    sy = S[:, 1]

    prev: list[float] = []
    for i in range(n):
        dx = sx - P[i, 0]
        dy = sy - P[i, 1]
        dist_sq = (dx * dx + dy * dy).tolist()
        curr = [0.0] * m
        for j in range(m):
            if i == 0 and j == 0:
                best = dist_sq[0]
            elif i == 0:
                best = max(curr[j - 1], dist_sq[j])
            elif j == 0:
                best = max(prev[0], dist_sq[0])
            else:
                best = max(min(prev[j], curr[j - 1], prev[j - 1]), dist_sq[j])
            curr[j] = best
        prev = curr
    return math.sqrt(prev[-1])


def frechet_value_search(
    pi: Curve,
    sigma_view: TranslatedView,
    lo: float,
    hi: float,
    tol: float,
    counter: FrechetQueryCounter,
    check_bracket: bool = True,
) -> float:
    """Approximate d_F(pi, sigma + tau) by bisection over decide_frechet.

    Requires d_F in [lo, hi]; returns the upper end of the final bracket, so
    the result v satisfies d_F <= v <= d_F + tol. Callers that have already
    verified decide(hi) may pass check_bracket=False to save one call.
    """
    if lo > hi:
        raise ValueError(f"inverted bracket: [{lo}, {hi}]")
    if tol <= 0:
        raise ValueError(f"nonpositive tolerance: {tol}")
    if check_bracket and not decide_frechet(pi, sigma_view, hi, counter):
        raise BracketError(f"decision is false at the upper bracket {hi}")
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break  # bracket collapsed to adjacent floats
        if decide_frechet(pi, sigma_view, mid, counter):
            hi = mid
        else:
            lo = mid
    return hi


def traversal_width_bound(pi: Curve, sigma_view: TranslatedView) -> float:
    """Width of a staircase traversal: a cheap upper bound on d_F."""
    P = pi.vertices
    S = sigma_view.vertices
    n = P.shape[0]
    m = S.shape[0]
    steps = max(n, m)
    ii = np.rint(np.linspace(0, n - 1, steps)).astype(int)
    jj = np.rint(np.linspace(0, m - 1, steps)).astype(int)
    dx = P[ii, 0] - S[jj, 0]
    dy = P[ii, 1] - S[jj, 1]
    return float(np.sqrt((dx * dx + dy * dy).max()))
