"""The basic two-phase solver: high-degree vertex branching with threshold max{2c, rho^2}."""

from __future__ import annotations

from .core import Classification, Instance, degree, volumes
from .search import Search
from .stats import SolveResult
from .structures import (
    Derandomizable,
    lemma_threshold_holds,
    phase1_dichotomy,
    phase2_dichotomy,
)


class SolverA(Search):
    def __init__(self, instance: Instance, **kwargs):
        super().__init__(instance, **kwargs)
        self.delta = max(2 * self.c, self.params.rho ** 2)
        self.phase1_threshold = self.delta

    def _phase1(self, cls: Classification, depth: int) -> bool:
        found = phase1_dichotomy(self.instance, self.params, cls)
        if isinstance(found, Derandomizable):
            return self._derandomized(cls)
        v = found.vertex
        h0 = len(cls.parts[0])
        deg = degree(v, cls.parts[0], self.instance)
        if self.check_recurrences:
            p = self.params
            self._record("A1-premise",
                         lemma_threshold_holds(deg, h0, p.m * max(p.kappa, 1), p.nu))

        def check_for(_col: int):
            return lambda child: len(child.parts[0]) <= h0 - deg

        return self._branch(cls, v, depth, "A1-vertex", check_for)

    def _phase2(self, cls: Classification, depth: int) -> bool:
        for i, part in enumerate(cls.parts):
            if 1 <= len(part) <= self.delta:
                return self._cleanup(cls, i, depth)
        nonempty = cls.nonempty(1)
        if len(nonempty) == 1:
            return self._avoid(cls, nonempty[0])
        found = phase2_dichotomy(self.instance, self.params, cls)
        if isinstance(found, Derandomizable):
            return self._derandomized(cls)
        v, i, j = found.vertex, found.part, found.other
        size_i, size_j = len(cls.parts[i]), len(cls.parts[j])
        deg_i = degree(v, cls.parts[i], self.instance)
        deg_j = degree(v, cls.parts[j], self.instance)
        mu2 = volumes(cls).mu2
        if self.check_recurrences:
            self._record("A2-premise",
                         lemma_threshold_holds(deg_i, size_i, self.params.m, self.params.nu)
                         and deg_j >= 1)

        def check_for(col: int):
            if col != i:
                return lambda ch: len(ch.parts[i]) <= size_i - deg_i and volumes(ch).mu2 < mu2
            return lambda ch: len(ch.parts[j]) <= size_j - deg_j and volumes(ch).mu2 < mu2

        return self._branch(cls, v, depth, "A2-vertex", check_for)


def solve_a(instance: Instance, *, check_recurrences: bool = False,
            strict: bool = True) -> SolveResult:
    """Decide list-colorability of ``instance`` with the basic solver.

    ``strict`` recomputes the intersection deficiency and rejects instances
    declaring a smaller one (:class:`~hlcolor.errors.CNotRespected`).
    """
    return SolverA(instance, check_recurrences=check_recurrences, strict=strict).solve()
