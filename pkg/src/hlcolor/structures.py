"""Structural subroutines shared by both solvers.

Degrees of an uncolored vertex are the same in a part and in its trace on the
uncolored vertices, so every degree here is taken over edge indices directly.
The induced count of a part with respect to a vertex set ``S`` counts the edges
of the part whose uncolored vertices all lie in ``S``; colored vertices are
immaterial.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from fractions import Fraction

from .core import Classification, Instance, Params, bits, degree, to_mask, trace_mask
from .errors import (
    EmptyActive,
    InternalInvariantViolation,
    PreconditionViolated,
)

# relative slack for float comparisons of recounted cardinalities
CERT_TOL = 1e-9


@dataclass(frozen=True)
class BranchVertex:
    """A vertex to branch on; ``part``/``other`` are the part indices certifying it."""

    vertex: int
    part: int | None = None
    other: int | None = None


@dataclass(frozen=True)
class Derandomizable:
    """The conditional-expectation completion is guaranteed to be proper."""


DERANDOMIZABLE = Derandomizable()

PhaseDichotomy = BranchVertex | Derandomizable


@dataclass(frozen=True)
class BalancedSet:
    s: frozenset[int]
    target_part: int
    lower: float
    upper: float
    appended: tuple[int, ...] = ()

    @property
    def mask(self) -> int:
        return to_mask(self.s)

    def recount(self, instance: Instance, cls: Classification) -> int:
        return induced_count(cls.parts[self.target_part], self.mask, cls, instance)

    def verify(self, instance: Instance, cls: Classification) -> int:
        """Recount the induced edges and check the certified band; return the count."""
        count = self.recount(instance, cls)
        slack = CERT_TOL * max(1, len(cls.parts[self.target_part]))
        if not self.lower - slack <= count <= self.upper + slack:
            raise InternalInvariantViolation(
                f"balanced set induces {count} edges, outside [{self.lower}, {self.upper}]")
        return count


def induced_count(part: Iterable[int], s_mask: int, cls: Classification,
                  instance: Instance) -> int:
    return sum(1 for e in part if not trace_mask(instance, cls, e) & ~s_mask)


def min_active_edge(cls: Classification, instance: Instance) -> int:
    if not cls.active:
        raise EmptyActive("no active edges")
    return min(cls.active, key=lambda e: (trace_mask(instance, cls, e).bit_count(), e))


def _argmax_vertex(candidates: Iterable[int], score) -> int:
    best, best_score = -1, None
    for v in sorted(candidates):
        s = score(v)
        if best_score is None or s > best_score:
            best, best_score = v, s
    return best


def phase1_dichotomy(instance: Instance, params: Params,
                     cls: Classification) -> PhaseDichotomy:
    """High-degree vertex in ``H_0`` or a guarantee that derandomization succeeds.

    The derandomizable branch is taken when ``m * kappa < nu ** |H_min|``.
    Otherwise the returned vertex has ``H_0``-degree above
    ``|H_0| / (2 log_nu(m kappa))``.  ``kappa`` is floored at 1 so the
    expectation bound also covers partially colored edges.
    """
    h0 = cls.parts[0]
    if len(h0) <= 2 * instance.c_declared:
        raise PreconditionViolated(f"|H_0| = {len(h0)} must exceed 2c = {2 * instance.c_declared}")
    hmin = min_active_edge(cls, instance)
    tr = trace_mask(instance, cls, hmin)
    if params.m * max(params.kappa, 1) < params.nu ** tr.bit_count():
        return DERANDOMIZABLE
    v = _argmax_vertex(bits(tr), lambda u: degree(u, h0, instance))
    return BranchVertex(v, 0, None)


def phase2_dichotomy(instance: Instance, params: Params,
                     cls: Classification) -> PhaseDichotomy:
    c = instance.c_declared
    if cls.parts[0]:
        raise PreconditionViolated("H_0 must be empty in phase II")
    nonempty = cls.nonempty(1)
    if len(nonempty) < 2:
        raise PreconditionViolated("phase II dichotomy needs two non-empty parts")
    small = [i for i in nonempty if len(cls.parts[i]) <= 2 * c]
    if small:
        raise PreconditionViolated(f"parts {small} have at most 2c edges")
    hmin = min_active_edge(cls, instance)
    tr = trace_mask(instance, cls, hmin)
    if params.m < params.nu ** tr.bit_count():
        return DERANDOMIZABLE
    j = cls.part_of(hmin)
    rest = [i for i in nonempty if i != j]
    v = _argmax_vertex(bits(tr), lambda u: sum(degree(u, cls.parts[i], instance) for i in rest))
    i = max(rest, key=lambda q: (Fraction(degree(v, cls.parts[q], instance), len(cls.parts[q])), -q))
    return BranchVertex(v, i, j)


def lemma_threshold_holds(deg: int, part_size: int, base: int, nu: int) -> bool:
    """Exact test of ``deg > part_size / (2 log_nu(base))``, i.e. ``base**(2 deg) > nu**part_size``."""
    return base ** (2 * deg) > nu ** part_size


def high_degree_set(part: Iterable[int], eps: float, cls: Classification,
                    instance: Instance) -> frozenset[int]:
    part = list(part)
    bound = eps * len(part)
    return frozenset(v for v in bits(cls.v0_mask) if degree(v, part, instance) > bound)


def balanced_set_basic(part: Iterable[int], eps1: float, eps2: float, cls: Classification,
                       instance: Instance, target_part: int = 0) -> BalancedSet:
    """Shrink ``V_0`` vertex by vertex until the induced count is about to drop too low.

    Vertices outside the high-degree set ``T(part, eps1)`` are removed in
    ascending order.  The result contains ``T`` and induces between
    ``(1 - eps2)|part|`` and ``(1 - (eps2 - eps1))|part|`` edges of ``part``.
    """
    part = sorted(part)
    if not 0 < eps1 < eps2 < 1:
        raise PreconditionViolated(f"need 0 < eps1 < eps2 < 1, got {eps1}, {eps2}")
    if not part:
        raise PreconditionViolated("cannot balance an empty part")
    size = len(part)
    threshold = (1 - eps2) * size
    high = high_degree_set(part, eps1, cls, instance)
    if induced_count(part, to_mask(high), cls, instance) > threshold:
        raise PreconditionViolated("the high-degree set already induces too many edges")

    traces = {e: trace_mask(instance, cls, e) for e in part}
    alive = set(part)
    count = size
    s = set(bits(cls.v0_mask))
    for v in sorted(s - high):
        bit = 1 << v
        lost = [e for e in alive if traces[e] & bit]
        if count - len(lost) <= threshold:
            break
        s.discard(v)
        alive.difference_update(lost)
        count -= len(lost)
    return BalancedSet(frozenset(s), target_part, threshold, (1 - (eps2 - eps1)) * size)


def _append_hitting_vertices(instance: Instance, cls: Classification, s: set[int],
                             edges: Iterable[int]) -> tuple[int, ...]:
    s_mask = to_mask(s)
    appended = []
    for e in sorted(edges):
        tr = trace_mask(instance, cls, e)
        if tr & s_mask:
            continue
        v = (tr & -tr).bit_length() - 1
        s.add(v)
        s_mask |= 1 << v
        appended.append(v)
    if len(appended) > instance.c_declared:
        raise InternalInvariantViolation(
            f"{len(appended)} edges avoid the balanced set but c = {instance.c_declared}")
    return tuple(appended)


def balanced_set_phase1(instance: Instance, cls: Classification, eps1: float,
                        eps2: float) -> BalancedSet:
    """Balanced set for ``H_0`` that meets every active edge in an uncolored vertex."""
    c = instance.c_declared
    h0 = cls.parts[0]
    if cls.improper:
        raise PreconditionViolated("partial coloring is improper")
    if not h0:
        raise PreconditionViolated("H_0 is empty")
    if not eps1 < eps2 / (1 + c):
        raise PreconditionViolated("need eps1 < eps2 / (1 + c)")
    if high_degree_set(h0, eps1, cls, instance):
        raise PreconditionViolated("H_0 has a vertex of degree above eps1 |H_0|")
    basic = balanced_set_basic(h0, eps1, eps2, cls, instance, 0)
    s = set(basic.s)
    appended = _append_hitting_vertices(instance, cls, s, cls.active)
    result = BalancedSet(frozenset(s), 0, basic.lower,
                         (1 - (eps2 - (1 + c) * eps1)) * len(h0), appended)
    result.verify(instance, cls)
    return result


def balanced_set_phase2(instance: Instance, cls: Classification, eps1: float,
                        eps2: float) -> BranchVertex | BalancedSet:
    """Common high-degree vertex of two large parts, or a balanced set for one of them.

    A returned balanced set for part ``i`` meets every active edge outside
    ``parts[i]`` in an uncolored vertex.
    """
    c = instance.c_declared
    if not 0 < eps1 < eps2 <= 0.5:
        raise PreconditionViolated(f"need 0 < eps1 < eps2 <= 1/2, got {eps1}, {eps2}")
    big = [i for i in cls.nonempty(1) if len(cls.parts[i]) > 2 * c]
    if len(big) < 2:
        raise PreconditionViolated("need two parts with more than 2c edges")
    big.sort(key=lambda i: (-len(cls.parts[i]), i))
    i, j = big[0], big[1]
    t_i = high_degree_set(cls.parts[i], eps1, cls, instance)
    t_j = high_degree_set(cls.parts[j], eps1, cls, instance)
    common = t_i & t_j
    if common:
        return BranchVertex(min(common), i, j)
    for p, t in ((i, t_i), (j, t_j)):
        part = cls.parts[p]
        if induced_count(part, to_mask(t), cls, instance) <= (1 - eps2) * len(part):
            break
    else:
        raise InternalInvariantViolation("both high-degree sets induce more than c edges")
    basic = balanced_set_basic(part, eps1, eps2, cls, instance, p)
    s = set(basic.s)
    appended = _append_hitting_vertices(instance, cls, s, cls.active - part)
    result = BalancedSet(frozenset(s), p, basic.lower,
                         (1 - (eps2 - (1 + c) * eps1)) * len(part), appended)
    result.verify(instance, cls)
    return result
