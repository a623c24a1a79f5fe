"""Recursion depth and node counts of both solvers against the number of edges.

Prints one CSV row per (instance, solver) and a per-size summary on stderr.

    python scripts/bench_depth.py --sizes 20,40,80,160 --seeds 5 --max-c 2
"""

from __future__ import annotations

import argparse
import csv
import sys
from collections import defaultdict
from statistics import mean

from hlcolor import solve_a, solve_b
from hlcolor.generator import gen_c_intersecting

SOLVERS = {
    "a": lambda inst: solve_a(inst, check_recurrences=True),
    "b": lambda inst: solve_b(inst, "full", check_recurrences=True),
    "b-simplified": lambda inst: solve_b(inst, "simplified", check_recurrences=True),
}


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", default="20,40,80,160")
    ap.add_argument("--k", type=int, default=3)
    ap.add_argument("--max-c", type=int, default=2)
    ap.add_argument("--seeds", type=int, default=5)
    ap.add_argument("--full-lists", action="store_true")
    args = ap.parse_args()

    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["m", "n", "c", "seed", "alg", "decision", "nodes_total", "depth_max",
                     "probes", "derand_successes", "recurrence_violations", "runtime_ms"])
    depth = defaultdict(list)
    for m in map(int, args.sizes.split(",")):
        n = m // 2 + 6
        for c in range(args.max_c + 1):
            for seed in range(args.seeds):
                inst = gen_c_intersecting(n, m, args.k, c, seed, full_lists=args.full_lists)
                for name, solve in SOLVERS.items():
                    res = solve(inst)
                    st = res.stats
                    depth[name, m].append(st.depth_max)
                    writer.writerow([m, n, c, seed, name, res.decision.value, st.nodes_total,
                                     st.depth_max, st.probes, st.derand_successes,
                                     st.recurrence_violations, f"{st.runtime_ms:.2f}"])
    for (name, m), values in sorted(depth.items()):
        print(f"{name:>13} m={m:<4} mean depth {mean(values):.2f} max {max(values)}",
              file=sys.stderr)


if __name__ == "__main__":
    main()
