"""Command-line interface.

Subcommands: decide, value, gen-queries, bench, estimate-arrangement.
All CSV output is UTF-8 with LF line endings and '.' decimals.
Exit codes: 0 success, 1 usage error, 2 data error.
"""

from __future__ import annotations

import argparse
import sys
import time

from .bench import (
    BenchRecord,
    aggregate_records,
    estimate_arrangement_size,
    gen_queries,
    read_queries,
    run_bench,
    write_aggregates,
    write_queries,
    write_records,
)
from .curves import CurveFormatError, load_curve, load_manifest
from .decider import decide_translation
from .value import ValueParams, binary_search_value, lipschitz_only_value, lmf_value


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage errors exit 1, not argparse's 2
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _build_parser() -> _Parser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--gamma-size", type=int, default=2000,
                        help="arrangement size threshold for the base case")
    common.add_argument("--gamma-depth", type=int, default=30,
                        help="recursion depth that forces the base case")
    common.add_argument("--epsilon", type=float, default=1e-7,
                        help="additive approximation target for values")
    common.add_argument("--coarse-factor", type=float, default=0.125,
                        help="coarse evaluation tolerance as a fraction of the box diagonal")

    parser = _Parser(prog="transfrechet",
                     description="Discrete Frechet distance under translation")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decide", parents=[common],
                       help="exact decision d_transF(A, B) <= delta")
    p.add_argument("curve_a")
    p.add_argument("curve_b")
    p.add_argument("--delta", type=float, required=True)

    p = sub.add_parser("value", parents=[common],
                       help="approximate d_transF(A, B) to epsilon")
    p.add_argument("curve_a")
    p.add_argument("curve_b")
    p.add_argument("--method", choices=("lmf", "binsearch", "lipschitz"), default="lmf")

    p = sub.add_parser("gen-queries", parents=[common],
                       help="generate NO/YES decision query sets from a dataset")
    p.add_argument("--manifest", required=True)
    p.add_argument("--pairs", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--same-class", action="store_true",
                   help="draw pairs within each curve-id prefix class")
    p.add_argument("--output", help="query CSV path (default: stdout)")

    p = sub.add_parser("bench", parents=[common], help="run a query file")
    p.add_argument("--queries", required=True)
    p.add_argument("--manifest", required=True)
    p.add_argument("--mode", choices=("decide", "value", "value-baselines"),
                   default="decide")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--output",
                   help="records CSV path; aggregates then go to stdout")
    p.add_argument("--estimate-arrangement", action="store_true",
                   help="fill arr_estimate for each query (decide mode)")
    p.add_argument("--samples", type=int, default=100_000)
    p.add_argument("--estimate-seed", type=int, default=0)

    p = sub.add_parser("estimate-arrangement", parents=[common],
                       help="sampling estimate of the arrangement size")
    p.add_argument("curve_a")
    p.add_argument("curve_b")
    p.add_argument("--delta", type=float, required=True)
    p.add_argument("--samples", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=0)

    return parser


def _value_params(args) -> ValueParams:
    return ValueParams(
        epsilon=args.epsilon,
        gamma_size=args.gamma_size,
        gamma_depth=args.gamma_depth,
        coarse_factor=args.coarse_factor,
    )


def _emit_single(record: BenchRecord) -> None:
    write_records([record], sys.stdout)


def _cmd_decide(args) -> int:
    pi = load_curve(args.curve_a)
    sigma = load_curve(args.curve_b)
    start = time.perf_counter()
    trace = decide_translation(pi, sigma, args.delta, _value_params(args).decider_params())
    elapsed = (time.perf_counter() - start) * 1000.0
    _emit_single(BenchRecord(
        query_id="cli", set_name="", level=0, curve_a=pi.id, curve_b=sigma.id,
        delta=args.delta, algorithm="decider",
        result="YES" if trace.result else "NO",
        time_ms=elapsed, bb_calls=trace.black_box_calls, base_cases=trace.base_cases,
    ))
    return 0


def _cmd_value(args) -> int:
    pi = load_curve(args.curve_a)
    sigma = load_curve(args.curve_b)
    runner = {"lmf": lmf_value, "binsearch": binary_search_value,
              "lipschitz": lipschitz_only_value}[args.method]
    start = time.perf_counter()
    trace = runner(pi, sigma, _value_params(args))
    elapsed = (time.perf_counter() - start) * 1000.0
    _emit_single(BenchRecord(
        query_id="cli", set_name="", level=0, curve_a=pi.id, curve_b=sigma.id,
        delta=0.0, algorithm=args.method, result=repr(trace.value),
        time_ms=elapsed, bb_calls=trace.black_box_calls, base_cases=trace.base_cases,
    ))
    return 0


def _cmd_gen_queries(args) -> int:
    curves = load_manifest(args.manifest)
    queries = gen_queries(curves, args.pairs, args.seed, _value_params(args),
                          same_class=args.same_class)
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="") as fh:
            write_queries(queries, fh)
    else:
        write_queries(queries, sys.stdout)
    return 0


def _cmd_bench(args) -> int:
    curves = load_manifest(args.manifest)
    with open(args.queries, "r", encoding="utf-8", newline="") as fh:
        queries = read_queries(fh)
    records = run_bench(
        queries, curves, args.mode, _value_params(args), threads=args.threads,
        with_estimate=args.estimate_arrangement,
        estimate_samples=args.samples, estimate_seed=args.estimate_seed,
    )
    aggregates = aggregate_records(records)
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="") as fh:
            write_records(records, fh)
        write_aggregates(aggregates, sys.stdout)
    else:
        write_records(records, sys.stdout)
        write_aggregates(aggregates, sys.stderr)
    return 0


def _cmd_estimate(args) -> int:
    pi = load_curve(args.curve_a)
    sigma = load_curve(args.curve_b)
    est = estimate_arrangement_size(pi, sigma, args.delta, args.samples, args.seed)
    print(repr(est))
    return 0


_COMMANDS = {
    "decide": _cmd_decide,
    "value": _cmd_value,
    "gen-queries": _cmd_gen_queries,
    "bench": _cmd_bench,
    "estimate-arrangement": _cmd_estimate,
}


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (OSError, CurveFormatError, ValueError, RuntimeError) as exc:
        print(f"transfrechet: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
