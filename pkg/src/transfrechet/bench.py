"""Benchmark harness: query generation, size estimation, runs, CSV reporting.

Query sets follow the construction used for the decider experiments: per
sampled curve pair, the distance under translation is bracketed to within
2e-7, then NO queries are placed at (1 - 4^l) times the lower end for
l in {-10..-1} and YES queries at (1 + 4^l) times the upper end for
l in {-10..2}.
"""

from __future__ import annotations

import csv
import random
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .curves import Curve
from .decider import decide_translation, initial_search_box
from .geometry import TOL, AxisBox, Circle, Point2, circle_box_boundary_intersections
from .value import ValueParams, binary_search_value, lipschitz_only_value, lmf_value

NO_LEVELS = tuple(range(-10, 0))
YES_LEVELS = tuple(range(-10, 3))

CSV_COLUMNS = (
    "query_id",
    "set",
    "level",
    "curve_a",
    "curve_b",
    "delta",
    "algorithm",
    "result",
    "time_ms",
    "bb_calls",
    "base_cases",
    "arr_estimate",
)

QUERY_COLUMNS = ("query_id", "set", "level", "curve_a", "curve_b", "delta", "expected")


@dataclass(frozen=True)
class QueryRecord:
    """One decision query with its generation metadata."""

    query_id: str
    set_name: str
    level: int
    curve_a: str
    curve_b: str
    delta: float
    expected: str = "unknown"


@dataclass(frozen=True)
class BenchRecord:
    """One executed query: outcome, wall time, and work counters."""

    query_id: str
    set_name: str
    level: int
    curve_a: str
    curve_b: str
    delta: float
    algorithm: str
    result: str
    time_ms: float
    bb_calls: int
    base_cases: int
    arr_estimate: float | None = None


def curve_class(curve_id: str) -> str:
    """Class label of a curve id: the prefix before the first underscore."""
    return curve_id.split("_", 1)[0]


def gen_queries(
    curves: list[Curve],
    n_pairs: int,
    seed: int,
    params: ValueParams = ValueParams(),
    same_class: bool = False,
) -> list[QueryRecord]:
    """Sample curve pairs and emit 10 NO + 13 YES queries per pair.

    The pair distance is bracketed with lmf_value to params.epsilon. Pairs
    whose distance is indistinguishable from zero cannot yield NO queries and
    are resampled. With same_class, pairs are drawn within each id-prefix
    class, distributed round-robin over the classes.
    """
    if len(curves) < 2:
        raise ValueError("need at least two curves to sample pairs")
    rng = random.Random(seed)
    by_index = list(range(len(curves)))

    pools: list[list[int]]
    if same_class:
        groups: dict[str, list[int]] = {}
        for k, c in enumerate(curves):
            groups.setdefault(curve_class(c.id), []).append(k)
        pools = [groups[name] for name in sorted(groups) if len(groups[name]) >= 2]
        if not pools:
            raise ValueError("no class has two curves to pair")
    else:
        pools = [by_index]

    queries: list[QueryRecord] = []
    pair_idx = 0
    attempts = 0
    while pair_idx < n_pairs:
        pool = pools[pair_idx % len(pools)]
        a, b = rng.sample(pool, 2)
        attempts += 1
        if attempts > 20 * n_pairs + 100:
            raise RuntimeError("could not sample enough pairs with nonzero distance")
        pi, sigma = curves[a], curves[b]
        value = lmf_value(pi, sigma, params).value
        delta_lb = max(0.0, value - params.epsilon)
        delta_ub = value + params.epsilon
        if delta_lb <= 10.0 * params.epsilon:
            continue  # NO queries would not be sound for a near-zero distance
        for level in NO_LEVELS:
            queries.append(
                QueryRecord(
                    query_id=f"p{pair_idx:04d}-NO{level}",
                    set_name="NO",
                    level=level,
                    curve_a=pi.id,
                    curve_b=sigma.id,
                    delta=(1.0 - 4.0**level) * delta_lb,
                    expected="NO",
                )
            )
        for level in YES_LEVELS:
            queries.append(
                QueryRecord(
                    query_id=f"p{pair_idx:04d}-YES{level}",
                    set_name="YES",
                    level=level,
                    curve_a=pi.id,
                    curve_b=sigma.id,
                    delta=(1.0 + 4.0**level) * delta_ub,
                    expected="YES",
                )
            )
        pair_idx += 1
    return queries


def estimate_arrangement_size(
    pi: Curve,
    sigma: Curve,
    delta: float,
    samples: int = 100_000,
    seed: int = 0,
) -> float:
    """Sampling estimate of the arrangement size inside the initial box.

    Samples difference-point pairs, counts their circle-circle intersections
    inside the box, and scales by (nm)^2 / samples; the exact number of
    circle-box crossings is added. Returns 0 for an empty initial box or a
    single circle.
    """
    if samples < 1:
        raise ValueError("samples must be >= 1")
    n, m = len(pi), len(sigma)
    nm = n * m
    if nm == 1:
        return 0.0
    box = initial_search_box(pi, sigma, delta)
    if box is None:
        return 0.0

    rng = np.random.default_rng(seed)
    P = pi.vertices
    S = sigma.vertices
    i1 = rng.integers(0, n, samples)
    j1 = rng.integers(0, m, samples)
    i2 = rng.integers(0, n, samples)
    j2 = rng.integers(0, m, samples)
    ax = P[i1, 0] - S[j1, 0]
    ay = P[i1, 1] - S[j1, 1]
    bx = P[i2, 0] - S[j2, 0]
    by = P[i2, 1] - S[j2, 1]

    dx = bx - ax
    dy = by - ay
    d = np.sqrt(dx * dx + dy * dy)
    valid = (d > TOL) & (d <= 2.0 * delta + TOL)
    inter = np.count_nonzero(valid)
    hits = 0
    if inter:
        ax, ay, bx, by, d = (v[valid] for v in (ax, ay, bx, by, d))
        half = d / 2.0
        h = np.sqrt(np.maximum(delta * delta - half * half, 0.0))
        ux, uy = (bx - ax) / d, (by - ay) / d
        mx, my = ax + half * ux, ay + half * uy
        p1x, p1y = mx - h * uy, my + h * ux
        p2x, p2y = mx + h * uy, my - h * ux
        in1 = _in_box(p1x, p1y, box)
        in2 = _in_box(p2x, p2y, box)
        tangent = np.abs(d - 2.0 * delta) <= TOL
        counts = in1.astype(np.int64) + in2.astype(np.int64)
        counts[tangent] = in1[tangent].astype(np.int64)
        hits = int(counts.sum())

    estimate = hits / samples * float(nm) * float(nm)
    crossings = 0
    for k in range(nm):
        center = Point2(
            float(P[k // m, 0] - S[k % m, 0]), float(P[k // m, 1] - S[k % m, 1])
        )
        crossings += len(circle_box_boundary_intersections(Circle(center, delta), box))
    return estimate + crossings


def _in_box(xs, ys, box: AxisBox):
    return (
        (xs >= box.x_lo - TOL)
        & (xs <= box.x_hi + TOL)
        & (ys >= box.y_lo - TOL)
        & (ys <= box.y_hi + TOL)
    )


def _run_one(
    query: QueryRecord,
    curves: dict[str, Curve],
    mode: str,
    params: ValueParams,
    with_estimate: bool,
    estimate_samples: int,
    estimate_seed: int,
) -> list[BenchRecord]:
    pi = curves[query.curve_a]
    sigma = curves[query.curve_b]
    records: list[BenchRecord] = []

    estimate = None
    if with_estimate:
        estimate = estimate_arrangement_size(
            pi, sigma, query.delta, estimate_samples, estimate_seed
        )

    def record(algorithm: str, result: str, elapsed_ms: float, calls: int, bases: int):
        records.append(
            BenchRecord(
                query_id=query.query_id,
                set_name=query.set_name,
                level=query.level,
                curve_a=query.curve_a,
                curve_b=query.curve_b,
                delta=query.delta,
                algorithm=algorithm,
                result=result,
                time_ms=elapsed_ms,
                bb_calls=calls,
                base_cases=bases,
                arr_estimate=estimate,
            )
        )

    if mode == "decide":
        start = time.perf_counter()
        trace = decide_translation(pi, sigma, query.delta, params.decider_params())
        elapsed = (time.perf_counter() - start) * 1000.0
        record(
            "decider",
            "YES" if trace.result else "NO",
            elapsed,
            trace.black_box_calls,
            trace.base_cases,
        )
        return records

    methods = {"value": ("lmf",), "value-baselines": ("lmf", "binsearch", "lipschitz")}[
        mode
    ]
    runners = {
        "lmf": lmf_value,
        "binsearch": binary_search_value,
        "lipschitz": lipschitz_only_value,
    }
    for name in methods:
        start = time.perf_counter()
        trace = runners[name](pi, sigma, params)
        elapsed = (time.perf_counter() - start) * 1000.0
        record(name, repr(trace.value), elapsed, trace.black_box_calls, trace.base_cases)
    return records


def run_bench(
    queries: list[QueryRecord],
    curves: list[Curve],
    mode: str,
    params: ValueParams = ValueParams(),
    threads: int = 1,
    with_estimate: bool = False,
    estimate_samples: int = 100_000,
    estimate_seed: int = 0,
) -> list[BenchRecord]:
    """Execute every query with the selected algorithm(s).

    Per-query failures are recorded as result ERROR and the run continues.
    Parallelism is across queries only; records are returned in query order.
    """
    if mode not in ("decide", "value", "value-baselines"):
        raise ValueError(f"unknown mode: {mode}")
    by_id = {c.id: c for c in curves}

    def safe(query: QueryRecord) -> list[BenchRecord]:
        try:
            return _run_one(
                query, by_id, mode, params, with_estimate, estimate_samples, estimate_seed
            )
        except Exception as exc:  # noqa: BLE001 - failures become records
            print(f"query {query.query_id} failed: {exc}", file=sys.stderr)
            return [
                BenchRecord(
                    query_id=query.query_id,
                    set_name=query.set_name,
                    level=query.level,
                    curve_a=query.curve_a,
                    curve_b=query.curve_b,
                    delta=query.delta,
                    algorithm=mode,
                    result="ERROR",
                    time_ms=0.0,
                    bb_calls=0,
                    base_cases=0,
                )
            ]

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            grouped = list(pool.map(safe, queries))
    else:
        grouped = [safe(q) for q in queries]
    return [rec for group in grouped for rec in group]


# ---------------------------------------------------------------------------
# CSV and aggregate reporting


def _fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return repr(value)
    return str(value)


def write_records(records: list[BenchRecord], fh) -> None:
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for r in records:
        writer.writerow(
            [
                r.query_id,
                r.set_name,
                _fmt(r.level),
                r.curve_a,
                r.curve_b,
                _fmt(r.delta),
                r.algorithm,
                r.result,
                _fmt(r.time_ms),
                _fmt(r.bb_calls),
                _fmt(r.base_cases),
                _fmt(r.arr_estimate),
            ]
        )


def read_records(fh) -> list[BenchRecord]:
    reader = csv.reader(fh)
    header = next(reader)
    if tuple(header) != CSV_COLUMNS:
        raise ValueError(f"unexpected bench CSV header: {header}")
    records = []
    for row in reader:
        records.append(
            BenchRecord(
                query_id=row[0],
                set_name=row[1],
                level=int(row[2]),
                curve_a=row[3],
                curve_b=row[4],
                delta=float(row[5]),
                algorithm=row[6],
                result=row[7],
                time_ms=float(row[8]),
                bb_calls=int(row[9]),
                base_cases=int(row[10]),
                arr_estimate=float(row[11]) if row[11] else None,
            )
        )
    return records


def write_queries(queries: list[QueryRecord], fh) -> None:
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(QUERY_COLUMNS)
    for q in queries:
        writer.writerow(
            [q.query_id, q.set_name, _fmt(q.level), q.curve_a, q.curve_b, _fmt(q.delta), q.expected]
        )


def read_queries(fh) -> list[QueryRecord]:
    reader = csv.reader(fh)
    header = next(reader)
    if tuple(header) != QUERY_COLUMNS:
        raise ValueError(f"unexpected query CSV header: {header}")
    return [
        QueryRecord(
            query_id=row[0],
            set_name=row[1],
            level=int(row[2]),
            curve_a=row[3],
            curve_b=row[4],
            delta=float(row[5]),
            expected=row[6],
        )
        for row in reader
    ]


def median(values: list[float]) -> float:
    s = sorted(values)
    mid = len(s) // 2
    if len(s) % 2:
        return float(s[mid])
    return (s[mid - 1] + s[mid]) / 2.0


def quartiles(values: list[float]) -> tuple[float, float]:
    """Inclusive-median (Tukey hinge) lower and upper quartiles."""
    s = sorted(values)
    half = (len(s) + 1) // 2
    return median(s[:half]), median(s[len(s) - half :])


def aggregate_records(records: list[BenchRecord]) -> list[tuple]:
    """Aggregate rows (set, level, algorithm, metric, count, mean, q1, q3)."""
    groups: dict[tuple, list[BenchRecord]] = {}
    for r in records:
        if r.result == "ERROR":
            continue
        groups.setdefault((r.set_name, r.level, r.algorithm), []).append(r)
    rows = []
    for (set_name, level, algorithm) in sorted(groups):
        for metric in ("time_ms", "bb_calls"):
            vals = [float(getattr(r, metric)) for r in groups[(set_name, level, algorithm)]]
            q1, q3 = quartiles(vals)
            rows.append(
                (set_name, level, algorithm, metric, len(vals), sum(vals) / len(vals), q1, q3)
            )
    return rows


def write_aggregates(rows: list[tuple], fh) -> None:
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(["set", "level", "algorithm", "metric", "count", "mean", "q1", "q3"])
    for set_name, level, algorithm, metric, count, mean, q1, q3 in rows:
        writer.writerow(
            [set_name, level, algorithm, metric, count, repr(mean), repr(q1), repr(q3)]
        )
