"""Command-line interface.

Exit codes: 0 success, 1 usage or parse error, 2 verification or oracle
mismatch, 3 oracle size/budget cap.
"""

from __future__ import annotations

import argparse
import math
import random
import statistics
import sys
import time
from typing import Sequence

from .engine import hausdorff_distance, verify_mapping
from .generate import gen_random_tree
from .io import ParseError, ResultDocument, read_tree, write_tree
from .oracle import OracleConfig, OracleLimitError, oracle_hausdorff
from .tree import Tree

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_MISMATCH = 2
EXIT_CAP = 3

# Below this many vertex pairs a process pool costs more than it saves.
_PARALLEL_MIN_PAIRS = 20_000


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse would exit with status 2
        raise UsageError(f"{self.prog}: {message}")


def _threads(value: str) -> int | None:
    if value == "auto":
        return None
    try:
        n = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer or 'auto', got {value!r}")
    if n < 1:
        raise argparse.ArgumentTypeError("thread count must be positive")
    return n


def _sizes(value: str) -> list[int]:
    try:
        sizes = [int(x) for x in value.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {value!r}")
    if not sizes or min(sizes) < 1:
        raise argparse.ArgumentTypeError("sizes must be positive integers")
    return sizes


def _workers(threads: int | None, t1: Tree, t2: Tree) -> int | None:
    if threads is None and t1.n * t2.n < _PARALLEL_MIN_PAIRS:
        return 1
    return threads


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="tree-hausdorff", description="Hausdorff distance between trees.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("compute", help="compute the distance between two edge-list files")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--out", help="write a JSON result document here")
    p.add_argument("--threads", type=_threads, default=None, help="worker processes or 'auto'")

    p = sub.add_parser("verify", help="re-check a result document against two trees")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("result")

    p = sub.add_parser("oracle", help="compare the engine with exhaustive search")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--max-vertices", type=int, default=OracleConfig.max_vertices)

    p = sub.add_parser("gen", help="write a uniformly random labeled tree")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--out", required=True)

    p = sub.add_parser("bench", help="time random pairs of trees")
    p.add_argument("--sizes", type=_sizes, default=[50, 100, 200, 300])
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--reps", type=int, default=1)
    p.add_argument("--threads", type=_threads, default=None)
    return parser


def _compute(args, out) -> int:
    t1, t2 = read_tree(args.a), read_tree(args.b)
    result = hausdorff_distance(t1, t2, workers=_workers(args.threads, t1, t2))
    print(result.distance, file=out)
    if args.out:
        report = verify_mapping(t1, t2, result)
        doc = ResultDocument.from_result(result, report.cover_distance)
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(doc.to_json())
    return EXIT_OK


def _verify(args, out, err) -> int:
    t1, t2 = read_tree(args.a), read_tree(args.b)
    with open(args.result, encoding="utf-8") as fh:
        doc = ResultDocument.from_json(fh.read())
    report = verify_mapping(t1, t2, doc.to_result())
    echoed = doc.cover_distance is None or doc.cover_distance == report.cover_distance
    print(f"valid: {str(report.valid).lower()}", file=out)
    print(f"cover_distance: {report.cover_distance}", file=out)
    print(f"distance: {doc.distance}", file=out)
    for problem in report.problems:
        print(f"problem: {problem}", file=err)
    if report.consistent and echoed:
        return EXIT_OK
    if not echoed:
        print(f"recorded cover_distance {doc.cover_distance} disagrees with recomputed value", file=err)
    return EXIT_MISMATCH


def _oracle(args, out, err) -> int:
    t1, t2 = read_tree(args.a), read_tree(args.b)
    try:
        config = OracleConfig(max_vertices=args.max_vertices)
    except ValueError as exc:
        raise UsageError(str(exc))
    try:
        expected = oracle_hausdorff(t1, t2, config)
    except OracleLimitError as exc:
        print(f"oracle: {exc}", file=err)
        return EXIT_CAP
    got = hausdorff_distance(t1, t2).distance
    print(f"oracle: {expected}", file=out)
    print(f"engine: {got}", file=out)
    return EXIT_OK if got == expected else EXIT_MISMATCH


def _gen(args) -> int:
    if args.n < 1:
        raise UsageError("--n must be at least 1")
    tree = gen_random_tree(args.n, args.seed)
    write_tree(args.out, tree, [f"uniform random labeled tree, n={args.n}, seed={args.seed}"])
    return EXIT_OK


def loglog_slope(sizes: Sequence[float], seconds: Sequence[float]) -> float:
    """Least-squares slope of log(seconds) against log(size)."""
    xs = [math.log(s) for s in sizes]
    ys = [math.log(max(t, 1e-9)) for t in seconds]
    return statistics.linear_regression(xs, ys).slope


def _bench(args, out) -> int:
    if args.reps < 1:
        raise UsageError("--reps must be at least 1")
    rng = random.Random(args.seed)
    print(f"{'n1':>6} {'n2':>6} {'seconds':>10} {'distance':>8}", file=out)
    means = []
    for n in args.sizes:
        times = []
        for _ in range(args.reps):
            t1 = gen_random_tree(n, rng.getrandbits(64))
            t2 = gen_random_tree(n, rng.getrandbits(64))
            start = time.perf_counter()
            result = hausdorff_distance(t1, t2, workers=_workers(args.threads, t1, t2))
            elapsed = time.perf_counter() - start
            times.append(elapsed)
            print(f"{t1.n:>6} {t2.n:>6} {elapsed:>10.4f} {result.distance:>8}", file=out)
        means.append(statistics.fmean(times))
    if len(set(args.sizes)) >= 2:
        print(f"log-log slope: {loglog_slope(args.sizes, means):.3f}", file=out)
    return EXIT_OK


def run_cli(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        if args.command == "compute":
            return _compute(args, out)
        if args.command == "verify":
            return _verify(args, out, err)
        if args.command == "oracle":
            return _oracle(args, out, err)
        if args.command == "gen":
            return _gen(args)
        return _bench(args, out)
    except (UsageError, ParseError, OSError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run_cli())
