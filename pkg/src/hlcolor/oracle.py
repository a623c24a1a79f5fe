"""Exhaustive list-coloring search used as ground truth on small instances."""

from __future__ import annotations

import math

from .core import Instance
from .errors import BudgetExceeded
from .stats import Decision, SolveResult

DEFAULT_BUDGET = 10**8


def _check_budget(instance: Instance, budget: int) -> None:
    leaves = math.prod(len(lst) for lst in instance.lists)
    if leaves > budget:
        raise BudgetExceeded(f"{leaves} leaf colorings exceed the budget of {budget}")


def _closing_edges(instance: Instance) -> list[list[tuple[int, ...]]]:
    """Edges grouped by their largest vertex, where they become fully colored."""
    closing: list[list[tuple[int, ...]]] = [[] for _ in range(instance.n)]
    for e in instance.edges:
        closing[e[-1]].append(e)
    return closing


def _search(instance: Instance, budget: int, count_all: bool):
    _check_budget(instance, budget)
    if any(len(e) <= 1 for e in instance.edges):
        return 0, None
    closing = _closing_edges(instance)
    chi = [0] * instance.n
    found = None
    total = 0

    def ok(v: int) -> bool:
        for e in closing[v]:
            first = chi[e[0]]
            if all(chi[u] == first for u in e):
                return False
        return True

    def walk(v: int) -> bool:
        nonlocal found, total
        if v == instance.n:
            total += 1
            if found is None:
                found = tuple(chi)
            return not count_all
        for col in instance.lists[v]:
            chi[v] = col
            if ok(v) and walk(v + 1):
                return True
        chi[v] = 0
        return False

    walk(0)
    return total, found


def solve_brute(instance: Instance, budget: int = DEFAULT_BUDGET) -> SolveResult:
    """Lexicographically first proper coloring, or UNCOLORABLE."""
    _, found = _search(instance, budget, count_all=False)
    if found is None:
        return SolveResult(Decision.UNCOLORABLE, None)
    return SolveResult(Decision.COLORABLE, found)


def count_proper(instance: Instance, budget: int = DEFAULT_BUDGET) -> int:
    total, _ = _search(instance, budget, count_all=True)
    return total
