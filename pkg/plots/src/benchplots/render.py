"""The four figure kinds over bench records.

* level-curve: mean of a metric per query level, with a quartile band, one
  line per (set, algorithm).
* calls-compare: black-box calls of the decider against the estimated
  arrangement size, per level, both with quartile bands.
* scatter: per-query metric of one algorithm against another, with the
  diagonal for reference.
* heatmap: log10 of the mean metric per curve-class pair.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .records import Row, aggregate, curve_class, read_rows

KINDS = ("level-curve", "calls-compare", "scatter", "heatmap")


@dataclass(frozen=True)
class PlotJob:
    input_csv: str
    kind: str
    output: str
    log_x: bool = False
    log_y: bool = False
    metric: str = "time_ms"

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ValueError(f"unknown plot kind: {self.kind}")
        if self.metric not in ("time_ms", "bb_calls"):
            raise ValueError(f"unknown metric: {self.metric}")


def level_curve_data(rows: list[Row], metric: str):
    """(set, algorithm) -> (levels, means, q1s, q3s), levels ascending."""
    stats = aggregate(rows)
    series: dict[tuple, tuple] = {}
    pairs = sorted({(s, a) for (s, _, a) in stats})
    for set_name, algorithm in pairs:
        levels = sorted(l for (s, l, a) in stats if s == set_name and a == algorithm)
        means, q1s, q3s = [], [], []
        for level in levels:
            _, mean, q1, q3 = stats[(set_name, level, algorithm)][metric]
            means.append(mean)
            q1s.append(q1)
            q3s.append(q3)
        series[(set_name, algorithm)] = (levels, means, q1s, q3s)
    return series


def scatter_data(rows: list[Row], metric: str):
    """Per-query metric for two algorithms: (name_x, name_y, xs, ys)."""
    algorithms = sorted({r.algorithm for r in rows if r.result != "ERROR"})
    if len(algorithms) < 2:
        raise ValueError("scatter needs records from at least two algorithms")
    preferred = [a for a in ("lmf", "binsearch") if a in algorithms]
    name_x, name_y = (preferred + [a for a in algorithms if a not in preferred])[:2]
    by_query: dict[str, dict[str, float]] = {}
    for r in rows:
        if r.result == "ERROR":
            continue
        by_query.setdefault(r.query_id, {})[r.algorithm] = float(getattr(r, metric))
    xs, ys = [], []
    for values in by_query.values():
        if name_x in values and name_y in values:
            xs.append(values[name_x])
            ys.append(values[name_y])
    return name_x, name_y, xs, ys


def heatmap_matrix(rows: list[Row], metric: str):
    """(classes, matrix) with matrix[i][j] = log10 mean metric of pair (i, j).

    Pairs are unordered: records for (a, b) and (b, a) land in the same cell.
    Missing pairs are NaN.
    """
    sums: dict[tuple, float] = {}
    counts: dict[tuple, int] = {}
    for r in rows:
        if r.result == "ERROR":
            continue
        pair = tuple(sorted((curve_class(r.curve_a), curve_class(r.curve_b))))
        sums[pair] = sums.get(pair, 0.0) + float(getattr(r, metric))
        counts[pair] = counts.get(pair, 0) + 1
    classes = sorted({c for pair in sums for c in pair})
    size = len(classes)
    matrix = np.full((size, size), np.nan)
    for (ca, cb), total in sums.items():
        mean = total / counts[(ca, cb)]
        value = math.log10(mean) if mean > 0 else np.nan
        i, j = classes.index(ca), classes.index(cb)
        matrix[i, j] = value
        matrix[j, i] = value
    return classes, matrix


def _render_level_curve(rows, job, ax):
    series = level_curve_data(rows, job.metric)
    for (set_name, algorithm), (levels, means, q1s, q3s) in series.items():
        label = f"{set_name}/{algorithm}" if set_name else algorithm
        ax.plot(levels, means, marker="o", label=label)
        ax.fill_between(levels, q1s, q3s, alpha=0.25)
    ax.set_xlabel("level")
    ax.set_ylabel(f"mean {job.metric}")
    ax.legend()


def _render_calls_compare(rows, job, ax):
    series = level_curve_data(rows, "bb_calls")
    for (set_name, algorithm), (levels, means, q1s, q3s) in series.items():
        label = f"{set_name}/{algorithm} calls" if set_name else f"{algorithm} calls"
        ax.plot(levels, means, marker="o", label=label)
        ax.fill_between(levels, q1s, q3s, alpha=0.25)
    # arrangement estimates share the level axis
    groups: dict[tuple, list[float]] = {}
    for r in rows:
        if r.result != "ERROR" and r.arr_estimate is not None:
            groups.setdefault((r.set_name, r.level), []).append(r.arr_estimate)
    for set_name in sorted({s for s, _ in groups}):
        levels = sorted(l for s, l in groups if s == set_name)
        means = [sum(groups[(set_name, l)]) / len(groups[(set_name, l)]) for l in levels]
        label = f"{set_name} arrangement estimate" if set_name else "arrangement estimate"
        ax.plot(levels, means, marker="s", linestyle="--", color="black", label=label)
    ax.set_yscale("log")
    ax.set_xlabel("level")
    ax.set_ylabel("black-box calls")
    ax.legend(fontsize="small")


def _render_scatter(rows, job, ax):
    name_x, name_y, xs, ys = scatter_data(rows, job.metric)
    ax.scatter(xs, ys, s=12, alpha=0.7)
    finite = [v for v in xs + ys if v > 0]
    lo = min(finite) if finite else 1e-3
    hi = max(finite) if finite else 1.0
    ax.plot([lo, hi], [lo, hi], color="gray", linewidth=1)
    ax.set_xscale("log")
    ax.set_yscale("log")
    ax.set_xlabel(f"{name_x} {job.metric}")
    ax.set_ylabel(f"{name_y} {job.metric}")


def _render_heatmap(rows, job, ax, fig):
    classes, matrix = heatmap_matrix(rows, job.metric)
    image = ax.imshow(matrix, cmap="viridis")
    ax.set_xticks(range(len(classes)), classes, rotation=90, fontsize="small")
    ax.set_yticks(range(len(classes)), classes, fontsize="small")
    fig.colorbar(image, ax=ax, label=f"log10 mean {job.metric}")


def render(job: PlotJob) -> str:
    """Render one figure to job.output; returns the output path."""
    rows = read_rows(job.input_csv)
    fig, ax = plt.subplots(figsize=(7.0, 4.8), dpi=120)
    try:
        if job.kind == "level-curve":
            _render_level_curve(rows, job, ax)
        elif job.kind == "calls-compare":
            _render_calls_compare(rows, job, ax)
        elif job.kind == "scatter":
            _render_scatter(rows, job, ax)
        else:
            _render_heatmap(rows, job, ax, fig)
        if job.log_x:
            ax.set_xscale("log")
        if job.log_y:
            ax.set_yscale("log")
        fig.tight_layout()
        fig.savefig(job.output)
    finally:
        plt.close(fig)
    return job.output
