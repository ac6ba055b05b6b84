"""Command-line entry point: ``nwtri {detect,count,min,gen,verify,bench}``.

Reports are single-line JSON on stdout. Exit status: 0 success / found,
1 not found or disagreement, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from nwtri.bench import BenchSuite, rows_to_csv, run_suite
from nwtri.count import count
from nwtri.detect import detect
from nwtri.graph import (
    DISTRIBUTIONS,
    GraphFormatError,
    Weight,
    WeightedGraph,
    generate_random,
    graph_to_json,
    parse_graph,
    parse_weight,
    serialize_graph,
    weight_to_json,
)
from nwtri.minimize import max_triangle, min_triangle
from nwtri.oracle import brute_count, brute_detect, brute_min
from nwtri.sparse import DEFAULT_EXPONENT, detect_sparse

EXIT_OK, EXIT_NOT_FOUND, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def emit(doc: dict) -> None:
    sys.stdout.write(json.dumps(doc, separators=(",", ":")) + "\n")


def read_graph(path: str | None) -> WeightedGraph:
    try:
        if path is None or path == "-":
            return parse_graph(sys.stdin.read())
        return parse_graph(Path(path).read_text())
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except GraphFormatError as exc:
        raise InputError(f"{'<stdin>' if path in (None, '-') else path}: {exc}") from None


def target_arg(text: str) -> Weight:
    try:
        return parse_weight(text)
    except (ValueError, OverflowError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def witness_report(hit) -> dict:
    if hit is None:
        return {"found": False}
    return {"found": True, "witness": sorted(hit.ids), "sum": weight_to_json(hit.weight_sum)}


def cmd_detect(args) -> int:
    G = read_graph(args.graph)
    if args.sparse:
        hit = detect_sparse(G, args.target, args.delta, exponent=args.exponent, threads=args.threads)
    else:
        hit = detect(G, args.target, threads=args.threads)
    emit(witness_report(hit))
    return EXIT_OK if hit else EXIT_NOT_FOUND


def cmd_count(args) -> int:
    G = read_graph(args.graph)
    emit(count(G, args.target, threads=args.threads).as_dict())
    return EXIT_OK


def cmd_min(args) -> int:
    G = read_graph(args.graph)
    if G.domain != "int":
        raise InputError("min needs integer weights")
    solve = max_triangle if args.maximize else min_triangle
    try:
        res = solve(G, w_max=args.w_max, threads=args.threads)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    if res is None:
        emit({"found": False})
        return EXIT_NOT_FOUND
    doc = witness_report(res.witness)
    doc["detect_calls"] = res.detect_calls
    emit(doc)
    return EXIT_OK


def _gen(args, seed: int) -> WeightedGraph:
    try:
        return generate_random(args.n, args.p, args.low, args.high, seed, args.dist)
    except (ValueError, OverflowError) as exc:
        raise InputError(str(exc)) from None


def cmd_gen(args) -> int:
    G = _gen(args, args.seed)
    text = graph_to_json(G) + "\n" if args.format == "json" else serialize_graph(G)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _agree(G: WeightedGraph, target: Weight) -> bool:
    hit = detect(G, target)
    if (hit is None) != (brute_detect(G, target) is None):
        return False
    if hit is not None:
        hit.validate(G, target)
    if count(G, target).total != brute_count(G, target).total:
        return False
    if G.domain == "int":
        got, want = min_triangle(G), brute_min(G)
        if (got is None) != (want is None) or (got is not None and got.minimum != want[1]):
            return False
    return True


def cmd_verify(args) -> int:
    if args.graph:
        graphs = [read_graph(args.graph)]
    else:
        rng = np.random.default_rng(args.seed)
        seeds = rng.integers(0, 2**63, size=args.trials, dtype=np.uint64)
        graphs = (_gen(args, int(s)) for s in seeds)
    trials = agree = 0
    for G in graphs:
        trials += 1
        agree += _agree(G, args.target)
    emit({"trials": trials, "agree": agree, "summary": f"{agree}/{trials} agree"})
    return EXIT_OK if agree == trials else EXIT_NOT_FOUND


def cmd_bench(args) -> int:
    try:
        suite = BenchSuite.from_json(Path(args.suite).read_text())
    except OSError as exc:
        raise InputError(f"cannot read suite {args.suite}: {exc.strerror}") from None
    except (ValueError, KeyError, TypeError) as exc:
        raise InputError(f"bad suite {args.suite}: {exc}") from None
    text = rows_to_csv(run_suite(suite, timing=not args.no_timing, threads=args.threads))
    if args.output:
        try:
            Path(args.output).write_text(text)
        except OSError as exc:
            raise InputError(f"cannot write {args.output}: {exc.strerror}") from None
    else:
        sys.stdout.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="nwtri", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--threads", type=int, default=1)

    graph_in = argparse.ArgumentParser(add_help=False)
    graph_in.add_argument("graph", nargs="?", default="-", help="graph file, '-' for stdin")
    graph_in.add_argument("--target", type=target_arg, default=0)

    gen_opts = argparse.ArgumentParser(add_help=False)
    gen_opts.add_argument("--n", type=int, default=50)
    gen_opts.add_argument("--p", type=float, default=0.3)
    gen_opts.add_argument("--low", type=int, default=-8)
    gen_opts.add_argument("--high", type=int, default=8)
    gen_opts.add_argument("--dist", choices=DISTRIBUTIONS, default="uniform")
    gen_opts.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("detect", parents=[common, graph_in], help="find a target-sum triangle")
    p.add_argument("--sparse", action="store_true", help="degree-split mode for sparse graphs")
    p.add_argument("--delta", type=int, default=None, help="degree threshold (sparse mode)")
    p.add_argument("--exponent", type=float, default=DEFAULT_EXPONENT)
    p.set_defaults(func=cmd_detect)

    p = sub.add_parser("count", parents=[common, graph_in], help="count target-sum triangles")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("min", parents=[common], help="minimum-weight triangle")
    p.add_argument("graph", nargs="?", default="-")
    p.add_argument("--w-max", type=int, default=None, help="weight bound override")
    p.add_argument("--maximize", action="store_true")
    p.set_defaults(func=cmd_min)

    p = sub.add_parser("gen", parents=[gen_opts], help="write a random graph")
    p.add_argument("--format", choices=("graph", "json"), default="graph")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", parents=[common, gen_opts], help="pipeline vs brute force")
    p.add_argument("graph", nargs="?", default=None)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--target", type=target_arg, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", parents=[common], help="run a JSON benchmark suite to CSV")
    p.add_argument("suite")
    p.add_argument("-o", "--output")
    p.add_argument("--no-timing", action="store_true", help="write 0 for wall_time_ns")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "threads", 1) < 1:
        print("nwtri: --threads must be >= 1", file=sys.stderr)
        return EXIT_INPUT
    try:
        return args.func(args)
    except InputError as exc:
        print(f"nwtri: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
