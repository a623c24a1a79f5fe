"""Recursion machinery shared by the two solvers.

A node holds the classification of its partial coloring.  Children are built
by extending the parent's (immutable) coloring, so backtracking is implicit.
The first complete proper coloring found ends the whole search.
"""

from __future__ import annotations

import logging
import sys
import time
from collections import Counter
from collections.abc import Callable, Mapping

from .core import (
    Classification,
    Instance,
    classify,
    compute_c,
    extend,
    is_proper_complete,
    smallest_completion,
    validate,
    volumes,
)
from .derandomize import avoid_color_extension, derandomize, expected_monochromatic
from .errors import CNotRespected, InternalInvariantViolation
from .simple import enumerate_simple
from .stats import Decision, SolveResult, Stats

log = logging.getLogger(__name__)

# relative tolerance on float-valued recurrence bounds
RECURRENCE_TOL = 1e-9

Check = Callable[[Classification], bool]


class Search:
    """Base class; subclasses provide ``phase1_threshold``, ``_phase1`` and ``_phase2``."""

    phase1_threshold: float

    def __init__(self, instance: Instance, *, check_recurrences: bool = False,
                 strict: bool = True):
        self.instance = instance
        self.params = validate(instance)
        if strict:
            true_c = compute_c(instance)
            if true_c > instance.c_declared:
                raise CNotRespected(
                    f"instance is {true_c}-intersecting but declares c = {instance.c_declared}")
        self.c = instance.c_declared
        self.check_recurrences = check_recurrences
        self.stats = Stats()
        self.rule_checks: Counter[str] = Counter()
        self.solution = None

    def solve(self) -> SolveResult:
        inst = self.instance
        start = time.perf_counter()
        sys.setrecursionlimit(max(sys.getrecursionlimit(), 20 * inst.n + 1000))
        found = False
        if all(len(e) >= 2 for e in inst.edges):
            found = self._node(classify(inst, (0,) * inst.n), 1)
        self.stats.runtime_ms = (time.perf_counter() - start) * 1000.0
        return SolveResult(Decision.COLORABLE if found else Decision.UNCOLORABLE,
                           self.solution if found else None, self.stats,
                           dict(self.rule_checks))

    def _node(self, cls: Classification, depth: int) -> bool:
        st = self.stats
        st.nodes_total += 1
        st.depth_max = max(st.depth_max, depth)
        if len(cls.parts[0]) > self.phase1_threshold:
            st.nodes_phase1 += 1
            return self._phase1(cls, depth)
        st.nodes_phase2 += 1
        if not cls.active:
            return self._finish(smallest_completion(self.instance, cls.chi))
        return self._phase2(cls, depth)

    def _phase1(self, cls: Classification, depth: int) -> bool:
        raise NotImplementedError

    def _phase2(self, cls: Classification, depth: int) -> bool:
        raise NotImplementedError

    def _try(self, cls: Classification, assignment: Mapping[int, int], depth: int,
             rule: str, check: Check | None = None) -> bool:
        child = classify(self.instance, extend(cls.chi, assignment))
        if child.improper:
            return False
        if self.check_recurrences and check is not None:
            self._record(rule, check(child))
        return self._node(child, depth + 1)

    def _record(self, rule: str, ok: bool) -> None:
        self.rule_checks[rule] += 1
        if not ok:
            self.stats.recurrence_violations += 1
            log.warning("recurrence clause %s violated", rule)

    def _finish(self, coloring) -> bool:
        if not is_proper_complete(self.instance, coloring):
            raise InternalInvariantViolation(f"completion {coloring} is not proper")
        self.solution = coloring
        return True

    def _derandomized(self, cls: Classification) -> bool:
        if expected_monochromatic(self.instance, cls.chi) >= 1:
            raise InternalInvariantViolation("derandomization was promised but expectation >= 1")
        self.stats.derand_successes += 1
        return self._finish(derandomize(self.instance, cls.chi))

    def _avoid(self, cls: Classification, i: int) -> bool:
        return self._finish(avoid_color_extension(self.instance, cls.chi, i))

    def _branch(self, cls: Classification, v: int, depth: int, rule: str,
                check_for: Callable[[int], Check]) -> bool:
        self.stats.branch_vertices += 1
        for col in self.instance.lists[v]:
            if self._try(cls, {v: col}, depth, rule, check_for(col)):
                return True
        return False

    def _cleanup(self, cls: Classification, i: int, depth: int) -> bool:
        t = volumes(cls).t

        def cleared(child: Classification) -> bool:
            return not child.parts[i] and volumes(child).t <= t - 1

        for simple in enumerate_simple(cls, self.instance, i, proper_only=True):
            self.stats.cleanups += 1
            if self._try(cls, simple.assignment, depth, "cleanup", cleared):
                return True
        return False


def within(value: float, bound: float) -> bool:
    return value <= bound * (1 + RECURRENCE_TOL) + RECURRENCE_TOL
