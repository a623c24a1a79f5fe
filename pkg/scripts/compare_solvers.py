"""Differential run of every solver against the brute-force oracle.

    python scripts/compare_solvers.py --count 5000 --max-n 10 --max-m 8 --seed 0
"""

from __future__ import annotations

import argparse
import random
import time
from collections import Counter

from hlcolor import is_proper_complete, solve_a, solve_b, solve_brute
from hlcolor.errors import Infeasible, TooManyEdges
from hlcolor.generator import gen_c_intersecting, gen_intersecting, gen_random


def draw(rng: random.Random, max_n: int, max_m: int, max_k: int):
    k = rng.randint(2, max_k)
    seed = rng.randrange(10**9)
    kind = rng.choice(("intersecting", "c-intersecting", "random"))
    if kind == "intersecting":
        return kind, gen_intersecting(rng.randint(3, max_n), rng.randint(1, max_m), k, seed)
    if kind == "c-intersecting":
        c = rng.randint(1, 3)
        return kind, gen_c_intersecting(rng.randint(2 * c + 3, max(max_n, 2 * c + 3)),
                                        rng.randint(c + 1, max(max_m, c + 1)), k, c, seed)
    return kind, gen_random(rng.randint(3, max_n), rng.randint(0, max_m), k, seed)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=2000)
    ap.add_argument("--max-n", type=int, default=10)
    ap.add_argument("--max-m", type=int, default=8)
    ap.add_argument("--max-k", type=int, default=4)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    kinds, mismatches, nodes = Counter(), Counter(), Counter()
    start = time.perf_counter()
    done = 0
    while done < args.count:
        try:
            kind, inst = draw(rng, args.max_n, args.max_m, args.max_k)
        except (TooManyEdges, Infeasible):
            continue
        done += 1
        kinds[kind] += 1
        truth = solve_brute(inst).colorable
        for name, res in (("a", solve_a(inst)), ("b", solve_b(inst)),
                          ("b-simplified", solve_b(inst, "simplified"))):
            nodes[name] += res.stats.nodes_total
            if res.colorable != truth or (res.colorable and
                                          not is_proper_complete(inst, res.coloring)):
                mismatches[name] += 1
                print(f"mismatch {name}: {inst}")
    print(f"{done} instances {dict(kinds)} in {time.perf_counter() - start:.1f}s")
    for name in ("a", "b", "b-simplified"):
        print(f"{name:>13}: {mismatches[name]} mismatches, {nodes[name]} nodes")


if __name__ == "__main__":
    main()
