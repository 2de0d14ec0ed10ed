"""Command line: render one figure from a bench CSV.

    benchplots --input bench.csv --kind level-curve --output fig.png
"""

from __future__ import annotations

import argparse
import sys

from .records import SchemaError
from .render import KINDS, PlotJob, render


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="benchplots", description="Render figures from bench CSV output"
    )
    parser.add_argument("--input", required=True, help="bench records CSV")
    parser.add_argument("--kind", required=True, choices=KINDS)
    parser.add_argument("--output", required=True, help="image file to write")
    parser.add_argument("--log-x", action="store_true")
    parser.add_argument("--log-y", action="store_true")
    parser.add_argument("--metric", choices=("time_ms", "bb_calls"),
                        default="time_ms")
    args = parser.parse_args(argv)

    job = PlotJob(
        input_csv=args.input,
        kind=args.kind,
        output=args.output,
        log_x=args.log_x,
        log_y=args.log_y,
        metric=args.metric,
    )
    try:
        render(job)
    except (SchemaError, OSError, ValueError) as exc:
        print(f"benchplots: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
