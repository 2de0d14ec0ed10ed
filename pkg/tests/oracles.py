"""Independent oracles for cross-checking the product algorithms.

Everything here recomputes results from first principles: the min-max value
dynamic program (vectorized over translation batches), a naive global
candidate enumeration for decisions under translation, and a grid
rasterization of circle arrangements for face-coverage checks. None of it
shares code with the branch-and-bound or reachability paths it validates.
"""

from __future__ import annotations

import math

import numpy as np


def batch_frechet_values(P: np.ndarray, S: np.ndarray, T: np.ndarray) -> np.ndarray:
    """Discrete Frechet distance of (P, S + t) for every row t of T.

    Straight min-max dynamic program on squared distances, evaluated for all
    translations at once.
    """
    P = np.asarray(P, dtype=float)
    S = np.asarray(S, dtype=float)
    T = np.asarray(T, dtype=float).reshape(-1, 2)
    n, m, k = P.shape[0], S.shape[0], T.shape[0]
    if k == 0:
        return np.zeros(0)

    sx = S[None, :, 0] + T[:, None, 0]
    sy = S[None, :, 1] + T[:, None, 1]

    prev = None
    for i in range(n):
        dx = sx - P[i, 0]
        dy = sy - P[i, 1]
        dist_sq = dx * dx + dy * dy
        curr = np.empty_like(dist_sq)
        if i == 0:
            np.maximum.accumulate(dist_sq, axis=1, out=curr)
        else:
            curr[:, 0] = np.maximum(prev[:, 0], dist_sq[:, 0])
            for j in range(1, m):
                best = np.minimum(prev[:, j], prev[:, j - 1])
                np.minimum(best, curr[:, j - 1], out=best)
                curr[:, j] = np.maximum(best, dist_sq[:, j])
        prev = curr
    return np.sqrt(prev[:, -1])


def frechet_value_reference(P, S, t=(0.0, 0.0)) -> float:
    return float(batch_frechet_values(P, S, np.array([t]))[0])


def _circle_pair_points(ax, ay, bx, by, r):
    """Intersection vertices of two equal-radius circles, each paired with a
    copy nudged toward the lens interior (the vertices themselves lie at
    distance exactly r from both centers, where a float comparison is a coin
    flip)."""
    d = math.hypot(bx - ax, by - ay)
    if d < 1e-15 or d > 2.0 * r:
        return []
    ux, uy = (bx - ax) / d, (by - ay) / d
    mx, my = (ax + bx) / 2.0, (ay + by) / 2.0
    h = math.sqrt(max(r * r - (d / 2.0) ** 2, 0.0))
    if h == 0.0:
        return [(mx, my)]
    out = []
    nudge = 1e-8 * (1.0 + r)
    for vx, vy in ((mx - h * uy, my + h * ux), (mx + h * uy, my - h * ux)):
        out.append((vx, vy))
        ix, iy = (ax - vx) + (bx - vx), (ay - vy) + (by - vy)
        norm = math.hypot(ix, iy)
        if norm > 1e-12:
            out.append((vx + nudge * ix / norm, vy + nudge * iy / norm))
    return out


def global_candidate_translations(P, S, delta: float) -> np.ndarray:
    """Candidate translations covering every face of the full arrangement.

    Circle-circle intersection points of all difference-point circles plus,
    per circle, midpoints of consecutive crossings along the horizontal line
    through its center, swept across a box enclosing all circles.
    """
    P = np.asarray(P, dtype=float)
    S = np.asarray(S, dtype=float)
    centers = (P[:, None, :] - S[None, :, :]).reshape(-1, 2)
    pad = 2.0 * delta + 1.0
    x_lo = centers[:, 0].min() - pad
    x_hi = centers[:, 0].max() + pad
    y_lo = centers[:, 1].min() - pad
    y_hi = centers[:, 1].max() + pad

    pts: list[tuple[float, float]] = [
        ((x_lo + x_hi) / 2.0, (y_lo + y_hi) / 2.0),
        (x_lo, y_lo),
        (x_lo, y_hi),
        (x_hi, y_lo),
        (x_hi, y_hi),
    ]
    k = centers.shape[0]
    for a in range(k):
        for b in range(a + 1, k):
            pts.extend(
                _circle_pair_points(
                    centers[a, 0], centers[a, 1], centers[b, 0], centers[b, 1], delta
                )
            )
    for a in range(k):
        cy = centers[a, 1]
        xs = [x_lo, x_hi]
        for b in range(k):
            dy = cy - centers[b, 1]
            disc = delta * delta - dy * dy
            if disc < 0:
                continue
            s = math.sqrt(disc)
            xs.append(centers[b, 0] - s)
            xs.append(centers[b, 0] + s)
        xs.sort()
        for lo, hi in zip(xs, xs[1:]):
            pts.append(((lo + hi) / 2.0, cy))
    return np.array(pts)


def oracle_decide_translation(P, S, delta: float) -> bool:
    """Brute-force decision: test the full candidate set with the value DP."""
    cands = global_candidate_translations(P, S, delta)
    out = False
    for start in range(0, cands.shape[0], 4096):
        vals = batch_frechet_values(P, S, cands[start : start + 4096])
        if bool((vals <= delta).any()):
            out = True
            break
    return out


def oracle_optimum_bracket(P, S, tol: float = 1e-9) -> tuple[float, float]:
    """Bracket the optimum by bisection over the brute-force decision."""
    hi = frechet_value_reference(P, S, (P[0, 0] - S[0, 0], P[0, 1] - S[0, 1]))
    lo = 0.0
    if hi == 0.0:
        return 0.0, 0.0
    for _ in range(200):
        if hi - lo <= tol:
            break
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if oracle_decide_translation(P, S, mid):
            hi = mid
        else:
            lo = mid
    return lo, hi


def rasterized_faces(centers, delta: float, box, grid: int = 96):
    """Faces of the circle arrangement inside a box, from a sign-vector grid.

    Returns (signatures, labels): per-cell closed-containment bitmask over the
    circles and per-cell face label (connected components of equal masks).
    """
    xs = np.linspace(box.x_lo, box.x_hi, grid)
    ys = np.linspace(box.y_lo, box.y_hi, grid)
    gx, gy = np.meshgrid(xs, ys, indexing="ij")
    masks = np.zeros((grid, grid), dtype=np.int64)
    for bit, (cx, cy) in enumerate(centers):
        inside = (gx - cx) ** 2 + (gy - cy) ** 2 <= delta * delta
        masks |= inside.astype(np.int64) << bit

    labels = -np.ones((grid, grid), dtype=np.int64)
    next_label = 0
    for sx in range(grid):
        for sy in range(grid):
            if labels[sx, sy] >= 0:
                continue
            sig = masks[sx, sy]
            stack = [(sx, sy)]
            labels[sx, sy] = next_label
            while stack:
                cx_, cy_ = stack.pop()
                for nx, ny in ((cx_ - 1, cy_), (cx_ + 1, cy_), (cx_, cy_ - 1), (cx_, cy_ + 1)):
                    if 0 <= nx < grid and 0 <= ny < grid and labels[nx, ny] < 0 \
                            and masks[nx, ny] == sig:
                        labels[nx, ny] = next_label
                        stack.append((nx, ny))
            next_label += 1
    return masks, labels


def candidate_signature(tx, ty, centers, delta: float, tol: float = 1e-9) -> int:
    sig = 0
    for bit, (cx, cy) in enumerate(centers):
        if (tx - cx) ** 2 + (ty - cy) ** 2 <= (delta + tol) ** 2:
            sig |= 1 << bit
    return sig
