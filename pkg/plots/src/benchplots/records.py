"""Bench CSV parsing and the aggregate statistics the plots are built from.

The input schema is the bench harness's record CSV; nothing here imports the
library that produced it. Means and quartiles reproduce the harness's printed
aggregates: inclusive-median (Tukey hinge) quartiles over each
(set, level, algorithm) group, ERROR rows excluded.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass

EXPECTED_HEADER = (
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

METRICS = ("time_ms", "bb_calls")


class SchemaError(ValueError):
    """The input file does not carry the bench record schema."""


@dataclass(frozen=True)
class Row:
    query_id: str
    set_name: str
    level: int
    curve_a: str
    curve_b: str
    delta: float
    algorithm: str
    result: str
    time_ms: float
    bb_calls: float
    base_cases: float
    arr_estimate: float | None


def read_rows(path) -> list[Row]:
    with open(path, "r", encoding="utf-8", newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = tuple(next(reader))
        except StopIteration:
            raise SchemaError(f"{path}: empty file") from None
        if header != EXPECTED_HEADER:
            raise SchemaError(
                f"{path}: expected bench columns {','.join(EXPECTED_HEADER)}, "
                f"got {','.join(header)}"
            )
        rows = []
        for raw in reader:
            rows.append(
                Row(
                    query_id=raw[0],
                    set_name=raw[1],
                    level=int(raw[2]),
                    curve_a=raw[3],
                    curve_b=raw[4],
                    delta=float(raw[5]),
                    algorithm=raw[6],
                    result=raw[7],
                    time_ms=float(raw[8]),
                    bb_calls=float(raw[9]),
                    base_cases=float(raw[10]),
                    arr_estimate=float(raw[11]) if raw[11] else None,
                )
            )
    return rows


def median(values: list[float]) -> float:
    s = sorted(values)
    mid = len(s) // 2
    if len(s) % 2:
        return float(s[mid])
    return (s[mid - 1] + s[mid]) / 2.0


def quartiles(values: list[float]) -> tuple[float, float]:
    """Inclusive-median quartiles: medians of the lower/upper halves, the
    overall median included in both when the count is odd."""
    s = sorted(values)
    half = (len(s) + 1) // 2
    return median(s[:half]), median(s[len(s) - half :])


def aggregate(rows: list[Row]) -> dict[tuple, dict[str, tuple]]:
    """(set, level, algorithm) -> metric -> (count, mean, q1, q3)."""
    groups: dict[tuple, list[Row]] = {}
    for row in rows:
        if row.result == "ERROR":
            continue
        groups.setdefault((row.set_name, row.level, row.algorithm), []).append(row)
    out: dict[tuple, dict[str, tuple]] = {}
    for key in sorted(groups):
        out[key] = {}
        for metric in METRICS:
            vals = [float(getattr(r, metric)) for r in groups[key]]
            q1, q3 = quartiles(vals)
            out[key][metric] = (len(vals), sum(vals) / len(vals), q1, q3)
    return out


def curve_class(curve_id: str) -> str:
    """Class label: the curve id prefix before the first underscore."""
    return curve_id.split("_", 1)[0]
