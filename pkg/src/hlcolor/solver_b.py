"""The faster solver: volume-dependent thresholds, balanced sets and probing.

When no vertex has large degree, a balanced set ``S`` is found and the
uncolored vertices outside ``S`` are colored tentatively (the probe).  If the
probe cannot be completed, some edge crossing ``S`` must take on ``S`` the
single color its outside part received, which gives the follow-up branches.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Iterator
from dataclasses import dataclass
from functools import lru_cache
from typing import Literal, NamedTuple

from .core import (
    Classification,
    Instance,
    bits,
    classify,
    creates_monochromatic,
    degree,
    extend,
    trace_mask,
    volumes,
)
from .errors import Eps2TooLarge, InternalInvariantViolation, PreconditionViolated
from .search import Search, within
from .stats import SolveResult
from .structures import (
    BalancedSet,
    BranchVertex,
    balanced_set_phase1,
    balanced_set_phase2,
    induced_count,
)

log = logging.getLogger(__name__)

# closed degree tests lean toward branching by this relative amount
DEGREE_SLACK = 1e-12


def xi_solve(mu: int, rho: int, c: int) -> float:
    """Root ``xi > H`` of ``(xi / H) ** xi = 2 mu`` with ``H = 4 (c+1) ln(2 rho)``.

    Bisection on ``xi ln(xi / H) - ln(2 mu)``, which increases for ``xi >= H``.
    """
    if mu < 1 or rho < 2:
        raise PreconditionViolated(f"need mu >= 1 and rho >= 2, got {mu}, {rho}")
    h = 4 * (c + 1) * math.log(2 * rho)
    target = math.log(2 * mu)

    def f(xi: float) -> float:
        return xi * math.log(xi / h) - target

    lo, hi = h, 2 * h
    while f(hi) < 0:
        lo, hi = hi, 2 * hi
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if f(mid) < 0:
            lo = mid
        else:
            hi = mid
    return lo if abs(f(lo)) < abs(f(hi)) else hi


@dataclass(frozen=True)
class SolverBParams:
    mu: int
    hconst: float
    xi: float
    eps: float
    delta: float
    eps1: float
    eps2: float


@lru_cache(maxsize=4096)
def params_for(mu: int, rho: int, c: int) -> SolverBParams:
    xi = xi_solve(mu, rho, c)
    h = 4 * (c + 1) * math.log(2 * rho)
    eps = h / xi
    # eps ** xi * 2 mu == 1, checked in log space so huge volumes do not overflow
    if abs(math.expm1(xi * math.log(eps) + math.log(2 * mu))) > 1e-6:
        raise InternalInvariantViolation(f"xi({mu}) = {xi} does not solve its defining equation")
    p = SolverBParams(mu=mu, hconst=h, xi=xi, eps=eps, delta=2 * (c + 1) / eps,
                      eps1=eps / (4 * (c + 1)), eps2=eps / 2)
    if p.eps2 > 0.5:
        raise Eps2TooLarge(f"eps2({mu}) = {p.eps2} exceeds 1/2")
    if not (p.xi > h > 1 and 0 < p.eps < 1 and p.eps1 < p.eps2 / (1 + c)):
        raise InternalInvariantViolation(f"parameter schedule broken at mu = {mu}: {p}")
    return p


class Extension(NamedTuple):
    kind: Literal["probe", "followup"]
    assignment: dict[int, int]
    edge: int | None


def _followup(instance: Instance, cls: Classification, e: int, s_mask: int,
              col: int) -> dict[int, int] | None:
    inside = list(bits(trace_mask(instance, cls, e) & s_mask))
    if not inside:
        log.warning("edge %d has no uncolored vertex in the balanced set", e)
        return None
    if any(col not in instance.lists[v] for v in inside):
        return None
    assignment = {v: col for v in inside}
    if creates_monochromatic(instance, cls.chi, assignment):
        return None
    return assignment


def probe_phase1(instance: Instance, chi, s: BalancedSet) -> Iterator[Extension]:
    """The probe on ``V_0 \\ S`` followed by the forced follow-up extensions.

    ``S`` must meet every active edge in an uncolored vertex.
    """
    cls = classify(instance, chi)
    s_mask = s.mask
    if any(not trace_mask(instance, cls, e) & s_mask for e in cls.active):
        raise PreconditionViolated("some active edge avoids the set")
    probe = {v: instance.lists[v][0] for v in bits(cls.v0_mask & ~s_mask)}
    yield Extension("probe", probe, None)
    hat = extend(cls.chi, probe)
    h0 = cls.parts[0]
    for e in sorted(cls.active):
        if e in h0 and not trace_mask(instance, cls, e) & ~s_mask:
            continue
        outside = {hat[v] for v in instance.edges[e] if not s_mask >> v & 1}
        if len(outside) != 1:
            continue
        assignment = _followup(instance, cls, e, s_mask, outside.pop())
        if assignment is not None:
            yield Extension("followup", assignment, e)


def probe_phase2(instance: Instance, chi, i: int, s: BalancedSet) -> Iterator[Extension]:
    """Probe avoiding color ``i`` outside ``S``, then color ``j`` on ``H & S`` for ``H`` in part ``j``.

    ``S`` must meet every active edge outside part ``i`` in an uncolored vertex.
    """
    cls = classify(instance, chi)
    s_mask = s.mask
    if any(not trace_mask(instance, cls, e) & s_mask for e in cls.active - cls.parts[i]):
        raise PreconditionViolated(f"some edge outside part {i} avoids the set")
    probe = {}
    for v in bits(cls.v0_mask & ~s_mask):
        col = next((x for x in instance.lists[v] if x != i), None)
        if col is None:
            raise PreconditionViolated(f"vertex {v} has no color other than {i}")
        probe[v] = col
    yield Extension("probe", probe, None)
    hat = extend(cls.chi, probe)
    for j in range(len(cls.parts)):
        if j == i:
            continue
        for e in sorted(cls.parts[j]):
            if j:
                col = j
            else:
                outside = {hat[v] for v in instance.edges[e] if not s_mask >> v & 1}
                if len(outside) != 1:
                    continue
                col = outside.pop()
            assignment = _followup(instance, cls, e, s_mask, col)
            if assignment is not None:
                yield Extension("followup", assignment, e)


def _at_least(deg: int, eps: float, size: int) -> bool:
    return deg >= eps * size * (1 - DEGREE_SLACK)


class SolverB(Search):
    def __init__(self, instance: Instance, mode: str = "full", **kwargs):
        super().__init__(instance, **kwargs)
        if mode not in ("full", "simplified"):
            raise ValueError(f"unknown mode {mode!r}")
        self.mode = mode
        rho, c, m = self.params.rho, self.c, max(instance.m, 1)
        # thresholds fixed from the input's m, per-node eps from the node's volume
        self.delta_m = params_for(m, rho, c).delta
        self.delta_mk = params_for(m ** instance.k, rho, c).delta
        self.phase1_threshold = self.delta_m

    def _params(self, mu: int) -> SolverBParams:
        return params_for(mu, self.params.rho, self.c)

    def _run_probes(self, cls: Classification, depth: int, candidates, probe_rule: str,
                    probe_check, followup_rule: str, followup_check) -> bool:
        for ext in candidates:
            if ext.kind == "probe":
                self.stats.probes += 1
                rule, check = probe_rule, probe_check
            else:
                self.stats.probe_followups += 1
                rule, check = followup_rule, followup_check
            if self._try(cls, ext.assignment, depth, rule, check):
                return True
        return False

    # phase I

    def _phase1(self, cls: Classification, depth: int) -> bool:
        inst, c = self.instance, self.c
        h0 = cls.parts[0]
        mu1 = len(h0)
        p = self._params(mu1)
        degs = {v: degree(v, h0, inst) for v in bits(cls.v0_mask)}
        best = min(degs, key=lambda v: (-degs[v], v))
        if _at_least(degs[best], p.eps1, mu1):
            bound = (1 - p.eps1) * mu1
            return self._branch(cls, best, depth, "B1-vertex",
                                lambda _col: lambda ch: within(len(ch.parts[0]), bound))

        if self.mode == "simplified":
            s = self._simple_set(cls, 0, degs)
            if s is not None:
                v, = set(bits(cls.v0_mask)) - s.s
                return self._run_probes(
                    cls, depth, probe_phase1(inst, cls.chi, s),
                    "B1s-probe", lambda ch: len(ch.parts[0]) <= mu1 - degs[v],
                    "B1s-followup", lambda ch: len(ch.parts[0]) <= degs[v] + c)

        s = balanced_set_phase1(inst, cls, p.eps1, p.eps2)
        s.verify(inst, cls)
        probe_bound = (1 - (p.eps2 - (1 + c) * p.eps1)) * mu1
        followup_bound = p.eps2 * mu1 + c
        return self._run_probes(
            cls, depth, probe_phase1(inst, cls.chi, s),
            "B1-probe", lambda ch: within(len(ch.parts[0]), probe_bound),
            "B1-followup", lambda ch: within(len(ch.parts[0]), followup_bound))

    # phase II

    def _phase2(self, cls: Classification, depth: int) -> bool:
        inst, c = self.instance, self.c
        for i, part in enumerate(cls.parts):
            if 1 <= len(part) <= self.delta_mk:
                return self._cleanup(cls, i, depth)
        nonempty = cls.nonempty(1)
        if len(nonempty) == 1:
            return self._avoid(cls, nonempty[0])
        mu2 = volumes(cls).mu2
        p = self._params(mu2)

        hub = self._phase2_hub(cls, nonempty, p.eps1)
        if hub is not None:
            return self._phase2_branch(cls, hub, depth, mu2, p)

        if self.mode == "simplified":
            i = min(nonempty, key=lambda q: (-len(cls.parts[q]), q))
            degs = {v: degree(v, cls.parts[i], inst) for v in bits(cls.v0_mask)}
            s = self._simple_set(cls, i, degs)
            if s is not None:
                v, = set(bits(cls.v0_mask)) - s.s
                size_i = len(cls.parts[i])
                return self._run_probes(
                    cls, depth, probe_phase2(inst, cls.chi, i, s),
                    "B2s-probe", lambda ch: len(ch.parts[i]) <= size_i - degs[v],
                    "B2s-followup", lambda ch: len(ch.parts[i]) <= degs[v] + c)

        found = balanced_set_phase2(inst, cls, p.eps1, p.eps2)
        if isinstance(found, BranchVertex):
            return self._phase2_branch(cls, found, depth, mu2, p)
        found.verify(inst, cls)
        i = found.target_part
        size_i = len(cls.parts[i])
        probe_bound = (1 - (p.eps2 - (1 + c) * p.eps1)) * mu2
        followup_bound = p.eps2 * size_i + c
        return self._run_probes(
            cls, depth, probe_phase2(inst, cls.chi, i, found),
            "B2-probe", lambda ch: within(volumes(ch).mu2, probe_bound),
            "B2-followup", lambda ch: within(len(ch.parts[i]), followup_bound))

    def _phase2_hub(self, cls: Classification, nonempty: list[int],
                    eps1: float) -> BranchVertex | None:
        inst = self.instance
        sizes = {q: len(cls.parts[q]) for q in nonempty}
        for v in bits(cls.v0_mask):
            degs = {q: degree(v, cls.parts[q], inst) for q in nonempty}
            qual = [q for q in nonempty if _at_least(degs[q], eps1, sizes[q])]
            if len(qual) >= 2:
                qual.sort(key=lambda q: (-degs[q] / sizes[q], q))
                return BranchVertex(v, qual[0], qual[1])
        return None

    def _phase2_branch(self, cls: Classification, hub: BranchVertex, depth: int, mu2: int,
                       p: SolverBParams) -> bool:
        bound = (1 - p.eps1) * mu2
        return self._branch(cls, hub.vertex, depth, "B2-vertex",
                            lambda _col: lambda ch: within(volumes(ch).mu2, bound))

    def _simple_set(self, cls: Classification, i: int, degs: dict[int, int]) -> BalancedSet | None:
        """``V_0`` minus one low-degree vertex, or None when no vertex can be dropped.

        The dropped vertex must not be the only uncolored vertex of an active
        edge that the set has to meet (every active edge for ``i = 0``, edges
        outside part ``i`` otherwise).
        """
        inst = self.instance
        must_meet = cls.active if i == 0 else cls.active - cls.parts[i]
        pinned = set()
        for e in must_meet:
            tr = trace_mask(inst, cls, e)
            if tr.bit_count() == 1:
                pinned.add(tr.bit_length() - 1)
        free = [v for v in degs if v not in pinned]
        if not free:
            return None
        v = min(free, key=lambda u: (degs[u], u))
        s = frozenset(bits(cls.v0_mask & ~(1 << v)))
        count = induced_count(cls.parts[i], cls.v0_mask & ~(1 << v), cls, inst)
        return BalancedSet(s, i, count, count)


def solve_b(instance: Instance, mode: str = "full", *, check_recurrences: bool = False,
            strict: bool = True) -> SolveResult:
    """Decide list-colorability with the balanced-set solver.

    ``mode="simplified"`` replaces the balanced set by ``V_0`` minus a single
    low-degree vertex; decisions are unchanged but the recursion may be deeper.
    """
    return SolverB(instance, mode=mode, check_recurrences=check_recurrences,
                   strict=strict).solve()
