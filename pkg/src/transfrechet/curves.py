"""Polygonal curves, dataset ingestion, and lazy translation views."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .geometry import AxisBox, Point2, Translation


class CurveFormatError(ValueError):
    """A curve or manifest file could not be parsed."""


class Curve:
    """Immutable polygonal curve with an (n, 2) float64 vertex array."""

    __slots__ = ("id", "vertices")

    def __init__(self, curve_id: str, vertices) -> None:
        arr = np.asarray(vertices, dtype=np.float64)
        if arr.ndim != 2 or arr.shape[1] != 2 or arr.shape[0] < 1:
            raise ValueError(f"curve {curve_id!r}: expected (n, 2) vertices, n >= 1")
        if not np.isfinite(arr).all():
            raise ValueError(f"curve {curve_id!r}: non-finite vertex coordinates")
        arr = np.ascontiguousarray(arr)
        arr.setflags(write=False)
        self.id = curve_id
        self.vertices = arr

    def __len__(self) -> int:
        return self.vertices.shape[0]

    def __repr__(self) -> str:
        return f"Curve({self.id!r}, {len(self)} vertices)"

    @property
    def first(self) -> Point2:
        return Point2(float(self.vertices[0, 0]), float(self.vertices[0, 1]))

    @property
    def last(self) -> Point2:
        return Point2(float(self.vertices[-1, 0]), float(self.vertices[-1, 1]))


class TranslatedView:
    """A curve shifted by a translation, materialized only on access."""

    __slots__ = ("base", "shift", "_vertices")

    def __init__(self, base: Curve, shift: Translation) -> None:
        self.base = base
        self.shift = shift
        self._vertices = None

    def __len__(self) -> int:
        return len(self.base)

    @property
    def vertices(self) -> np.ndarray:
        if self._vertices is None:
            self._vertices = self.base.vertices + np.array(
                [self.shift.dx, self.shift.dy]
            )
        return self._vertices

    @property
    def first(self) -> Point2:
        v = self.base.vertices
        return Point2(float(v[0, 0]) + self.shift.dx, float(v[0, 1]) + self.shift.dy)

    @property
    def last(self) -> Point2:
        v = self.base.vertices
        return Point2(float(v[-1, 0]) + self.shift.dx, float(v[-1, 1]) + self.shift.dy)


@dataclass(frozen=True)
class CurveStats:
    """Per-curve summaries reusable across all translation queries."""

    bbox: AxisBox
    first: Point2
    last: Point2


def translate_view(c: Curve, t: Translation) -> TranslatedView:
    """O(1) shifted view of a curve; vertex i reads as c.vertices[i] + t."""
    return TranslatedView(c, t)


def curve_stats(c: Curve) -> CurveStats:
    v = c.vertices
    bbox = AxisBox(
        float(v[:, 0].min()),
        float(v[:, 0].max()),
        float(v[:, 1].min()),
        float(v[:, 1].max()),
    )
    return CurveStats(bbox=bbox, first=c.first, last=c.last)


def load_curve(path) -> Curve:
    """Load a curve from a UTF-8 text file, one "x y" vertex per nonempty line."""
    path = Path(path)
    rows: list[tuple[float, float]] = []
    with path.open("r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            stripped = line.strip()
            if not stripped:
                continue
            parts = stripped.split()
            if len(parts) != 2:
                raise CurveFormatError(
                    f"{path}:{lineno}: expected two coordinates, got {stripped!r}"
                )
            try:
                x, y = float(parts[0]), float(parts[1])
            except ValueError:
                raise CurveFormatError(
                    f"{path}:{lineno}: malformed coordinate in {stripped!r}"
                ) from None
            rows.append((x, y))
    if not rows:
        raise CurveFormatError(f"{path}: empty curve file")
    return Curve(path.stem, rows)


def load_manifest(path) -> list[Curve]:
    """Load every curve listed in a manifest, paths relative to the manifest."""
    path = Path(path)
    base = path.parent
    curves: list[Curve] = []
    with path.open("r", encoding="utf-8") as fh:
        for line in fh:
            entry = line.strip()
            if not entry:
                continue
            curves.append(load_curve(base / entry))
    if not curves:
        raise CurveFormatError(f"{path}: empty manifest")
    return curves
