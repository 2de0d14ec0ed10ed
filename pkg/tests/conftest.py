"""Shared fixtures and instance generators."""

from __future__ import annotations

import random
from pathlib import Path

import numpy as np
import pytest

from transfrechet import Curve


def random_curve(rng: random.Random, max_len: int = 8, span: int = 8,
                 name: str = "c") -> Curve:
    """Random integer-grid curve, the workhorse for correctness suites."""
    n = rng.randint(1, max_len)
    pts = [(rng.randint(0, span), rng.randint(0, span)) for _ in range(n)]
    return Curve(name, pts)


def random_instance(rng: random.Random, max_len: int = 8, span: int = 8):
    return (
        random_curve(rng, max_len, span, "pi"),
        random_curve(rng, max_len, span, "sigma"),
    )


def smooth_curve(rng: random.Random, n: int, name: str, scale: float = 4.0) -> Curve:
    """Random-walk curve with momentum; stands in for handwriting strokes."""
    x, y = rng.uniform(-1, 1), rng.uniform(-1, 1)
    vx, vy = rng.uniform(-1, 1), rng.uniform(-1, 1)
    pts = []
    step = scale / max(n, 1)
    for _ in range(n):
        pts.append((x, y))
        vx = 0.8 * vx + rng.uniform(-1.0, 1.0)
        vy = 0.8 * vy + rng.uniform(-1.0, 1.0)
        norm = max((vx * vx + vy * vy) ** 0.5, 1e-9)
        x += step * vx / norm
        y += step * vy / norm
    return Curve(name, pts)


def write_dataset(directory: Path, curves: list[Curve]) -> Path:
    """Write curves as text files plus a manifest; returns the manifest path."""
    directory.mkdir(parents=True, exist_ok=True)
    names = []
    for c in curves:
        path = directory / f"{c.id}.txt"
        with path.open("w", encoding="utf-8") as fh:
            for x, y in c.vertices:
                fh.write(f"{float(x)!r} {float(y)!r}\n")
        names.append(path.name)
    manifest = directory / "manifest.txt"
    manifest.write_text("\n".join(names) + "\n", encoding="utf-8")
    return manifest


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240817)
