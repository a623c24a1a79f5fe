"""Command-line front end.

Exit codes: 0 colorable / success, 1 uncolorable / rejected, 2 input error,
3 internal invariant violation, 4 budget exceeded.
"""

from __future__ import annotations

import argparse
import csv
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, fields
from pathlib import Path

from .core import Instance, compute_c, is_proper_complete, validate
from .errors import BudgetExceeded, HLCSyntaxError, InternalInvariantViolation, InvalidInstance
from .generator import (
    PRNG_ID,
    gen_c_intersecting,
    gen_intersecting,
    gen_projective,
    gen_random,
    gen_uncolorable,
)
from .io import parse_instance, parse_solution, render_instance, render_solution
from .oracle import DEFAULT_BUDGET, solve_brute
from .solver_a import solve_a
from .solver_b import solve_b
from .stats import Decision, SolveResult, Stats

EXIT_OK, EXIT_NO, EXIT_INPUT, EXIT_INTERNAL, EXIT_BUDGET = 0, 1, 2, 3, 4

ALGORITHMS = ("a", "b", "b-simplified", "brute")
KINDS = ("intersecting", "c-intersecting", "uncolorable", "random", "projective")


def brute_budget() -> int:
    return int(os.environ.get("HLC_BRUTE_BUDGET", DEFAULT_BUDGET))


def run_algorithm(instance: Instance, alg: str, *, check_recurrences: bool = False,
                  strict: bool = True) -> SolveResult:
    if alg == "a":
        return solve_a(instance, check_recurrences=check_recurrences, strict=strict)
    if alg == "b":
        return solve_b(instance, "full", check_recurrences=check_recurrences, strict=strict)
    if alg == "b-simplified":
        return solve_b(instance, "simplified", check_recurrences=check_recurrences,
                       strict=strict)
    if alg == "brute":
        validate(instance)
        start = time.perf_counter()
        result = solve_brute(instance, brute_budget())
        result.stats.runtime_ms = (time.perf_counter() - start) * 1000.0
        return result
    raise ValueError(f"unknown algorithm {alg!r}")


def _load(path: str) -> Instance:
    return parse_instance(Path(path).read_text(encoding="utf-8"))


def cmd_validate(args) -> int:
    inst = _load(args.file)
    p = validate(inst)
    c = compute_c(inst) if args.strict else None
    print(f"n={p.n} m={p.m} k={inst.k} nu={p.nu} rho={p.rho} kappa={p.kappa} "
          f"c_declared={inst.c_declared}" + (f" c={c}" if c is not None else ""))
    if args.strict and c != inst.c_declared:
        print(f"declared c = {inst.c_declared} but the instance is {c}-intersecting",
              file=sys.stderr)
        return EXIT_INPUT
    return EXIT_OK


def cmd_solve(args) -> int:
    inst = _load(args.file)
    result = run_algorithm(inst, args.alg, check_recurrences=args.check_recurrences,
                           strict=not args.trust_c)
    sys.stdout.write(render_solution(result.decision, result.coloring))
    if args.stats_json:
        Path(args.stats_json).write_text(result.stats.to_json() + "\n", encoding="utf-8")
    if args.check_recurrences and result.stats.recurrence_violations:
        print(f"{result.stats.recurrence_violations} recurrence violations", file=sys.stderr)
        return EXIT_INTERNAL
    return EXIT_OK if result.colorable else EXIT_NO


def cmd_gen(args) -> int:
    if args.kind == "intersecting":
        inst = gen_intersecting(args.n, args.m, args.k, args.seed, full_lists=args.full_lists)
    elif args.kind == "c-intersecting":
        inst = gen_c_intersecting(args.n, args.m, args.k, args.c, args.seed,
                                  full_lists=args.full_lists)
    elif args.kind == "random":
        inst = gen_random(args.n, args.m, args.k, args.seed)
    elif args.kind == "projective":
        inst = gen_projective(args.q, args.k, args.seed, extra=args.m,
                              full_lists=args.full_lists)
    else:
        inst = gen_uncolorable(args.k, args.seed)
    comments = [f"generator: {args.kind} seed={args.seed} prng={PRNG_ID}"]
    text = render_instance(inst, comments)
    if args.output in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(args.output).write_text(text, encoding="utf-8")
    return EXIT_OK


def cmd_verify(args) -> int:
    inst = _load(args.file)
    validate(inst)
    decision, coloring = parse_solution(Path(args.coloring).read_text(encoding="utf-8"))
    if decision is Decision.COLORABLE:
        if is_proper_complete(inst, coloring):
            print("OK")
            return EXIT_OK
        print("REJECTED: not a proper list coloring")
        return EXIT_NO
    truth = solve_brute(inst, brute_budget())
    if truth.colorable:
        print("REJECTED: instance is colorable")
        return EXIT_NO
    print("OK")
    return EXIT_OK


def _bench_instance(family: str, m: int, n: int, k: int, c: int, seed: int) -> Instance:
    if family == "intersecting":
        return gen_intersecting(n, m, k, seed)
    if family == "c-intersecting":
        return gen_c_intersecting(n, m, k, c, seed)
    if family == "random":
        return gen_random(n, m, k, seed)
    if family == "projective":
        # m is read as the prime order of the plane
        return gen_projective(m, k, seed, full_lists=True)
    return gen_uncolorable(k, seed)


def _bench_row(job):
    family, alg, m, n, k, c, seed = job
    inst = _bench_instance(family, m, n, k, c, seed)
    result = run_algorithm(inst, alg, check_recurrences=True)
    row = {"family": family, "alg": alg, "m": inst.m, "n": inst.n, "k": k,
           "c": inst.c_declared, "seed": seed, "decision": result.decision.value}
    row.update(asdict(result.stats))
    return row


def cmd_bench(args) -> int:
    sizes = [int(s) for s in args.sizes.split(",")]
    algs = args.algs.split(",")
    for alg in algs:
        if alg not in ALGORITHMS:
            raise InvalidInstance(f"unknown algorithm {alg!r}")
    jobs = []
    for m in sizes:
        n = args.n if args.n else m // 2 + 6
        for seed in range(args.seeds):
            for alg in algs:
                jobs.append((args.family, alg, m, n, args.k, args.c, seed))
    header = ["family", "alg", "m", "n", "k", "c", "seed", "decision"]
    header += [f.name for f in fields(Stats)]
    writer = csv.DictWriter(sys.stdout, fieldnames=header, lineterminator="\n")
    writer.writeheader()
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            rows = list(pool.map(_bench_row, jobs))
    else:
        rows = map(_bench_row, jobs)
    for row in rows:
        writer.writerow(row)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hlc", description="List coloring of c-intersecting hypergraphs")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check an instance file")
    p.add_argument("file")
    p.add_argument("--strict", action="store_true", help="recompute c and fail on mismatch")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("solve", help="decide colorability")
    p.add_argument("file")
    p.add_argument("--alg", choices=ALGORITHMS, default="b")
    p.add_argument("--stats-json", metavar="PATH")
    p.add_argument("--check-recurrences", action="store_true")
    p.add_argument("--trust-c", action="store_true", help="skip recomputing c")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("gen", help="generate a random instance")
    p.add_argument("--kind", choices=KINDS, required=True)
    p.add_argument("--n", type=int, default=10)
    p.add_argument("--m", type=int, default=8)
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--c", type=int, default=0)
    p.add_argument("--q", type=int, default=3, help="prime order for --kind projective")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--full-lists", action="store_true", help="give every vertex all k colors")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", help="check a solution file against an instance")
    p.add_argument("file")
    p.add_argument("--coloring", required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="CSV of search statistics against instance size")
    p.add_argument("--family", choices=KINDS, default="c-intersecting",
                   help="instance family; for 'projective' the sizes are plane orders")
    p.add_argument("--sizes", default="20,40,80")
    p.add_argument("--n", type=int, default=0, help="vertex count (default m // 2 + 6)")
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--c", type=int, default=1)
    p.add_argument("--seeds", type=int, default=3)
    p.add_argument("--algs", default="a,b")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_bench)
    return parser


def run(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (HLCSyntaxError, InvalidInstance, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except InternalInvariantViolation as exc:
        print(f"internal invariant violation: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET


def main() -> None:
    sys.exit(run())
