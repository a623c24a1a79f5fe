from __future__ import annotations

import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hlcolor import Instance, classify, degree, validate
from hlcolor.core import bits, to_mask, trace_mask
from hlcolor.errors import EmptyActive, InternalInvariantViolation, PreconditionViolated
from hlcolor.generator import projective_plane
from hlcolor.structures import (
    DERANDOMIZABLE,
    BalancedSet,
    BranchVertex,
    balanced_set_basic,
    balanced_set_phase1,
    balanced_set_phase2,
    high_degree_set,
    induced_count,
    min_active_edge,
    phase1_dichotomy,
    phase2_dichotomy,
)
from strategies import instances, partial_colorings

PATH = ((0, 1), (1, 2), (2, 3), (3, 4))
PG3 = projective_plane(3)


def zero(inst):
    return classify(inst, (0,) * inst.n)


def brute_induced(inst, cls, part, s):
    """Edges of ``part`` whose uncolored vertices all lie in ``s``."""
    return sum(1 for e in part if all(v in s for v in inst.edges[e] if cls.chi[v] == 0))


# min_active_edge


def test_min_active_edge_smallest_trace():
    inst = Instance.uniform(3, [(0, 1), (0, 1, 2)], [1, 2])
    assert min_active_edge(zero(inst), inst) == 0


def test_min_active_edge_counts_uncolored_only():
    inst = Instance.uniform(7, [(0, 1, 2), (3, 4, 5, 6)], [1, 2])
    cls = classify(inst, (1, 0, 0, 0, 0, 0, 0))
    assert min_active_edge(cls, inst) == 0


def test_min_active_edge_tie_to_smallest_index():
    inst = Instance.uniform(4, [(2, 3), (0, 1)], [1, 2])
    # edges are stored as given; both have two uncolored vertices
    assert min_active_edge(zero(inst), inst) == 0


def test_min_active_edge_requires_active():
    inst = Instance.uniform(2, [(0, 1)], [1, 2])
    with pytest.raises(EmptyActive):
        min_active_edge(classify(inst, (1, 2)), inst)


# phase dichotomies


def test_phase1_triangle_branches_on_vertex_zero():
    inst = Instance.uniform(3, ((0, 1), (1, 2), (0, 2)), [1, 2])
    assert phase1_dichotomy(inst, validate(inst), zero(inst)) == BranchVertex(0, 0, None)


def test_phase1_large_edges_derandomizable():
    inst = Instance.uniform(8, [tuple(range(8))], [1, 2])
    assert phase1_dichotomy(inst, validate(inst), zero(inst)) is DERANDOMIZABLE


def test_phase1_requires_large_h0():
    inst = Instance.uniform(4, [(0, 1), (2, 3)], [1, 2])
    with pytest.raises(PreconditionViolated):
        phase1_dichotomy(inst, validate(inst), zero(inst))


def test_phase2_two_small_parts_derandomizable():
    inst = Instance.uniform(5, [(0, 1, 3), (0, 2, 4)], [1, 2])
    cls = classify(inst, (0, 0, 0, 1, 2))
    assert phase2_dichotomy(inst, validate(inst), cls) is DERANDOMIZABLE


def test_phase2_vertex_branch():
    # part 1 = {0,3,5}, part 2 = {0,1,4}; the minimum edge has trace {0}
    inst = Instance.uniform(6, [(0, 3, 5), (0, 1, 4)], [1, 2])
    cls = classify(inst, (0, 0, 0, 1, 2, 1))
    p = validate(inst)
    found = phase2_dichotomy(inst, p, cls)
    assert found == BranchVertex(0, 2, 1)
    deg_i = degree(0, cls.parts[2], inst)
    assert p.m ** (2 * deg_i) > p.nu ** len(cls.parts[2])
    assert degree(0, cls.parts[1], inst) >= 1


def test_phase2_needs_two_parts():
    inst = Instance.uniform(3, [(0, 1, 2)], [1, 2])
    with pytest.raises(PreconditionViolated):
        phase2_dichotomy(inst, validate(inst), classify(inst, (1, 0, 0)))


@given(instances(max_n=8, max_m=8))
def test_phase1_vertex_branch_has_high_degree(inst):
    cls = zero(inst)
    if len(cls.parts[0]) <= 2 * inst.c_declared:
        return
    p = validate(inst)
    found = phase1_dichotomy(inst, p, cls)
    if found is DERANDOMIZABLE:
        return
    deg = degree(found.vertex, cls.parts[0], inst)
    # deg * 2 log_nu(m kappa) > |H_0|, in exact integer form
    assert (p.m * max(p.kappa, 1)) ** (2 * deg) > p.nu ** len(cls.parts[0])
    assert deg * 2 * math.log(p.m * max(p.kappa, 1), p.nu) > len(cls.parts[0]) * (1 - 1e-12)


# high-degree set


def test_high_degree_set_path():
    inst = Instance.uniform(5, PATH, [1, 2])
    cls = zero(inst)
    assert high_degree_set(range(4), 0.6, cls, inst) == frozenset()
    assert high_degree_set(range(4), 0.4, cls, inst) == {1, 2, 3}
    assert high_degree_set(range(4), 1.0, cls, inst) == frozenset()


@given(st.data())
def test_high_degree_set_monotone(data):
    inst = data.draw(instances())
    cls = classify(inst, data.draw(partial_colorings(inst)))
    a, b = sorted(data.draw(st.lists(st.floats(0, 1.5), min_size=2, max_size=2)))
    part = sorted(cls.active)
    assert high_degree_set(part, b, cls, inst) <= high_degree_set(part, a, cls, inst)


# balanced sets


def test_basic_path_example():
    inst = Instance.uniform(5, PATH, [1, 2])
    cls = zero(inst)
    bs = balanced_set_basic(range(4), 0.6, 0.75, cls, inst)
    assert bs.s == {2, 3, 4}
    assert bs.recount(inst, cls) == 2
    assert bs.lower == pytest.approx(1) and bs.upper == pytest.approx(3.4)
    for v in range(3):
        # every earlier prefix removal kept more than the lower bound
        kept = set(range(v, 5))
        assert brute_induced(inst, cls, range(4), kept) > bs.lower


def test_basic_single_edge_high_degree_set_too_large():
    # every vertex of the lone edge has degree 1 > 0.1, so T induces the edge
    inst = Instance.uniform(3, [(0, 1, 2)], [1, 2])
    with pytest.raises(PreconditionViolated):
        balanced_set_basic([0], 0.1, 0.5, zero(inst), inst)


def test_basic_rejects_bad_eps():
    inst = Instance.uniform(5, PATH, [1, 2])
    with pytest.raises(PreconditionViolated):
        balanced_set_basic(range(4), 0.75, 0.75, zero(inst), inst)


def _pg3_plus_complement():
    extra = tuple(v for v in range(13) if v not in PG3[0])
    return Instance.uniform(13, PG3 + [extra], [1, 2])


def test_phase1_nothing_appended():
    inst = _pg3_plus_complement()
    cls = zero(inst)
    bs = balanced_set_phase1(inst, cls, 0.4, 0.9)
    assert bs.appended == ()
    basic = balanced_set_basic(cls.parts[0], 0.4, 0.9, cls, inst)
    assert bs.s == basic.s


def test_phase1_one_appended_vertex():
    inst = _pg3_plus_complement()
    assert inst.c_declared == 1
    cls = zero(inst)
    basic = balanced_set_basic(cls.parts[0], 0.4, 0.95, cls, inst)
    bs = balanced_set_phase1(inst, cls, 0.4, 0.95)
    assert len(bs.appended) == 1 and len(bs.s) == len(basic.s) + 1
    count = brute_induced(inst, cls, cls.parts[0], bs.s)
    assert bs.lower <= count <= bs.upper
    assert all(set(inst.edges[e]) & bs.s for e in cls.active)


def test_phase1_declared_c_too_small():
    good = _pg3_plus_complement()
    inst = Instance(k=2, c_declared=0, n=13, edges=good.edges, lists=good.lists)
    with pytest.raises(InternalInvariantViolation):
        balanced_set_phase1(inst, zero(inst), 0.4, 0.95)


def test_phase1_rejects_high_degree():
    inst = Instance.uniform(5, PATH, [1, 2], c_declared=2)
    with pytest.raises(PreconditionViolated):
        balanced_set_phase1(inst, zero(inst), 0.2, 0.75)


def _pg3_two_parts():
    # color the points of line 0 as 1, 1, 2, 2; every other line meets it once
    chi = [0] * 13
    for v, col in zip(PG3[0], (1, 1, 2, 2)):
        chi[v] = col
    inst = Instance.uniform(13, PG3, [1, 2, 3])
    return inst, classify(inst, tuple(chi))


def test_phase2_hub_vertex():
    inst = Instance.uniform(8, [(0, 1, 6), (0, 2, 6), (0, 3, 7), (0, 4, 7)], [1, 2])
    cls = classify(inst, (0, 0, 0, 0, 0, 0, 1, 2))
    found = balanced_set_phase2(inst, cls, 0.2, 0.5)
    assert found == BranchVertex(0, 1, 2)
    for q in (1, 2):
        assert degree(0, cls.parts[q], inst) >= 0.2 * len(cls.parts[q])


def test_phase2_hub_in_projective_plane():
    inst, cls = _pg3_two_parts()
    assert len(cls.parts[1]) == len(cls.parts[2]) == 6 and not cls.parts[0]
    found = balanced_set_phase2(inst, cls, 0.3, 0.5)
    assert isinstance(found, BranchVertex) and {found.part, found.other} == {1, 2}


def test_phase2_balanced_set():
    inst, cls = _pg3_two_parts()
    found = balanced_set_phase2(inst, cls, 0.34, 0.5)
    assert isinstance(found, BalancedSet)
    part = cls.parts[found.target_part]
    count = brute_induced(inst, cls, part, found.s)
    assert found.lower <= count <= found.upper
    for e in cls.active - part:
        assert set(bits(trace_mask(inst, cls, e))) & found.s


def test_phase2_rejects_large_eps2():
    inst, cls = _pg3_two_parts()
    with pytest.raises(PreconditionViolated):
        balanced_set_phase2(inst, cls, 0.3, 0.6)


@given(st.data())
def test_basic_bounds_hold_when_preconditions_do(data):
    inst = data.draw(instances(max_n=8, max_m=8))
    cls = classify(inst, data.draw(partial_colorings(inst)))
    part = sorted(cls.active)
    eps1 = data.draw(st.floats(0.01, 0.98))
    eps2 = data.draw(st.floats(eps1 + 0.005, 0.995))
    if not part or cls.improper:
        return
    t = high_degree_set(part, eps1, cls, inst)
    if induced_count(part, to_mask(t), cls, inst) > (1 - eps2) * len(part):
        return
    bs = balanced_set_basic(part, eps1, eps2, cls, inst)
    count = brute_induced(inst, cls, part, bs.s)
    assert bs.lower <= count <= bs.upper + 1e-9
    assert t <= bs.s <= cls.v0
