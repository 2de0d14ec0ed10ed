"""Fixtures: a small dataset benched through the primary CLI."""

from __future__ import annotations

import random
import subprocess
import sys
from pathlib import Path

import pytest

CLI = [sys.executable, "-m", "transfrechet.cli"]


def run_cli(*args: str) -> subprocess.CompletedProcess:
    proc = subprocess.run([*CLI, *args], capture_output=True, text=True)
    assert proc.returncode == 0, proc.stderr
    return proc


def write_dataset(directory: Path) -> Path:
    """Six wiggly curves in three classes (a, b, c), two curves each."""
    rng = random.Random(31)
    directory.mkdir(parents=True, exist_ok=True)
    names = []
    for cls in "abc":
        for k in range(2):
            x, y = rng.uniform(-1, 1), rng.uniform(-1, 1)
            lines = []
            for _ in range(rng.randint(5, 7)):
                lines.append(f"{x!r} {y!r}")
                x += rng.uniform(-1, 1)
                y += rng.uniform(-1, 1)
            name = f"{cls}_{k}.txt"
            (directory / name).write_text("\n".join(lines) + "\n", encoding="utf-8")
            names.append(name)
    manifest = directory / "manifest.txt"
    manifest.write_text("\n".join(names) + "\n", encoding="utf-8")
    return manifest


@pytest.fixture(scope="session")
def bench_artifacts(tmp_path_factory):
    """Query file plus decide-mode and value-baselines bench outputs,
    each with the aggregate lines the primary CLI printed."""
    root = tmp_path_factory.mktemp("bench")
    manifest = write_dataset(root / "data")

    queries = root / "queries.csv"
    run_cli("gen-queries", "--manifest", str(manifest), "--pairs", "2",
            "--seed", "5", "--output", str(queries))

    decide_csv = root / "decide.csv"
    decide_proc = run_cli(
        "bench", "--queries", str(queries), "--manifest", str(manifest),
        "--mode", "decide", "--output", str(decide_csv),
        "--estimate-arrangement", "--samples", "4000",
    )

    small = root / "queries_small.csv"
    lines = queries.read_text(encoding="utf-8").splitlines()
    small.write_text("\n".join(lines[:7]) + "\n", encoding="utf-8")
    value_csv = root / "value.csv"
    value_proc = run_cli(
        "bench", "--queries", str(small), "--manifest", str(manifest),
        "--mode", "value-baselines", "--output", str(value_csv),
    )

    return {
        "manifest": manifest,
        "queries": queries,
        "decide_csv": decide_csv,
        "decide_aggregates": decide_proc.stdout,
        "value_csv": value_csv,
        "value_aggregates": value_proc.stdout,
    }
