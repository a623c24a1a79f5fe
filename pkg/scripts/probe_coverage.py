"""Which recursion rules fire on projective planes, where no vertex has high degree.

    python scripts/probe_coverage.py --orders 3,5,7 --colors 2,3
"""

from __future__ import annotations

import argparse

from hlcolor import solve_a, solve_b
from hlcolor.generator import gen_projective


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--orders", default="3,5,7")
    ap.add_argument("--colors", default="2,3")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    for q in map(int, args.orders.split(",")):
        for k in map(int, args.colors.split(",")):
            inst = gen_projective(q, k, args.seed, full_lists=True)
            runs = (("a", solve_a(inst, check_recurrences=True)),
                    ("b", solve_b(inst, check_recurrences=True)),
                    ("b-simplified", solve_b(inst, "simplified", check_recurrences=True)))
            for name, res in runs:
                st = res.stats
                rules = " ".join(f"{r}={n}" for r, n in sorted(res.rule_checks.items()))
                print(f"q={q} k={k} {name:>13} {res.decision.value:<11} nodes={st.nodes_total:<4} "
                      f"depth={st.depth_max:<3} violations={st.recurrence_violations} {rules}")


if __name__ == "__main__":
    main()
