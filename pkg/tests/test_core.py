from __future__ import annotations

import random
from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hlcolor import Instance, classify, compute_c, degree, is_proper_complete, validate, volumes
from hlcolor.core import Classification, creates_monochromatic, extend
from hlcolor.errors import (
    BadColor,
    DuplicateVertexInEdge,
    EmptyList,
    InvalidInstance,
    ListTooSmall,
    VertexOutOfRange,
)
from strategies import instances, partial_colorings

TRIANGLE = ((0, 1), (1, 2), (0, 2))


def naive_c(edges) -> int:
    best = 0
    for a in edges:
        best = max(best, sum(1 for b in edges if b is not a and not set(a) & set(b)))
    return best


# validate


def test_params_triangle():
    p = validate(Instance.uniform(3, TRIANGLE, [1, 2]))
    assert (p.nu, p.rho, p.kappa, p.m, p.n) == (2, 2, 2, 3, 3)


def test_kappa_is_max_pairwise_intersection():
    inst = Instance(k=3, c_declared=0, n=3, edges=(), lists=((1, 2), (2, 3), (1, 3)))
    assert validate(inst).kappa == 1


def test_singleton_list_rejected():
    inst = Instance(k=2, c_declared=0, n=2, edges=((0, 1),), lists=((1,), (1, 2)))
    with pytest.raises(ListTooSmall):
        validate(inst)


@pytest.mark.parametrize("inst, err", [
    (Instance(k=2, c_declared=0, n=2, edges=(), lists=((), (1, 2))), EmptyList),
    (Instance(k=2, c_declared=0, n=2, edges=(), lists=((1, 3), (1, 2))), BadColor),
    (Instance(k=65, c_declared=0, n=1, edges=(), lists=((1, 2),)), BadColor),
    (Instance(k=2, c_declared=0, n=2, edges=((0, 2),), lists=((1, 2),) * 2), VertexOutOfRange),
    (Instance(k=2, c_declared=0, n=2, edges=((0, 0),), lists=((1, 2),) * 2),
     DuplicateVertexInEdge),
    (Instance(k=2, c_declared=-1, n=1, edges=(), lists=((1, 2),)), InvalidInstance),
    (Instance(k=2, c_declared=0, n=3, edges=(), lists=((1, 2),)), InvalidInstance),
])
def test_validate_rejects(inst, err):
    with pytest.raises(err):
        validate(inst)


def test_k_64_accepted():
    inst = Instance(k=64, c_declared=0, n=2, edges=((0, 1),), lists=((1, 64),) * 2)
    assert validate(inst).rho == 2


# compute_c


@pytest.mark.parametrize("edges, c", [
    (TRIANGLE, 0),
    (((0, 1), (2, 3)), 1),
    (((0, 1), (2, 3), (4, 5)), 2),
])
def test_compute_c_examples(edges, c):
    assert compute_c(Instance.uniform(6, edges, [1, 2])) == c


@given(instances(), st.randoms(use_true_random=False))
def test_compute_c_matches_naive_and_is_relabel_invariant(inst, rnd):
    assert compute_c(inst) == naive_c(inst.edges)
    perm = list(range(inst.n))
    rnd.shuffle(perm)
    edges = [tuple(perm[v] for v in e) for e in inst.edges]
    rnd.shuffle(edges)
    relabeled = Instance(k=inst.k, c_declared=0, n=inst.n, edges=tuple(edges), lists=inst.lists)
    assert compute_c(relabeled) == compute_c(inst)


# classify


def test_classify_single_color_trace():
    inst = Instance.uniform(3, [(0, 1, 2)], [1, 2])
    cls = classify(inst, (1, 0, 0))
    assert cls.parts[1] == {0} and cls.active == {0}


def test_classify_two_colors_not_active():
    inst = Instance.uniform(3, [(0, 1, 2)], [1, 2])
    cls = classify(inst, (1, 2, 0))
    assert not cls.active and not cls.improper


def test_classify_monochromatic_is_improper():
    cls = classify(Instance.uniform(2, [(0, 1)], [1, 2]), (1, 1))
    assert cls.improper and not cls.active


@given(st.data())
def test_parts_partition_active(data):
    inst = data.draw(instances())
    chi = data.draw(partial_colorings(inst))
    cls = classify(inst, chi)
    seen = set()
    for part in cls.parts:
        assert not seen & part
        seen |= part
    assert seen == cls.active
    for e in cls.active:
        nonzero = {chi[v] for v in inst.edges[e]} - {0}
        assert len(nonzero) <= 1 and 0 in {chi[v] for v in inst.edges[e]}
        assert e in cls.parts[next(iter(nonzero), 0)]


@given(instances(min_edge=1))
def test_zero_coloring_puts_every_edge_in_h0(inst):
    cls = classify(inst, (0,) * inst.n)
    assert cls.parts[0] == frozenset(range(inst.m))


# degree and volumes


@pytest.mark.parametrize("v, edges, d", [
    (1, TRIANGLE, 2),
    (4, TRIANGLE, 0),
    (0, ((0, 1), (0, 2), (0, 3)), 3),
])
def test_degree_examples(v, edges, d):
    inst = Instance.uniform(5, edges, [1, 2])
    assert degree(v, range(inst.m), inst) == d


def _cls_with_sizes(sizes) -> Classification:
    parts, idx = [], 0
    for s in sizes:
        parts.append(frozenset(range(idx, idx + s)))
        idx += s
    return Classification(chi=(), v0_mask=0, active=frozenset(range(idx)),
                          parts=tuple(parts), improper=False)


@pytest.mark.parametrize("sizes, expected", [
    ((3, 0, 0), (3, 3, 1)),
    ((0, 2, 3), (0, 6, 2)),
    ((0, 0, 0), (0, 1, 0)),
])
def test_volume_examples(sizes, expected):
    vol = volumes(_cls_with_sizes(sizes))
    assert (vol.mu1, vol.mu2, vol.t) == expected


@given(st.lists(st.integers(0, 5), min_size=2, max_size=6))
def test_mu2_is_one_iff_parts_empty(sizes):
    vol = volumes(_cls_with_sizes(sizes))
    assert (vol.mu2 == 1) == all(s <= 1 for s in sizes)
    assert (vol.t == 0) == (sum(sizes) == 0)


# properness


def test_proper_complete_examples():
    assert is_proper_complete(Instance.uniform(4, [(0, 1), (2, 3)], [1, 2]), (1, 2, 1, 2))
    assert not is_proper_complete(Instance.uniform(2, [(0, 1)], [1, 2]), (1, 1))
    inst = Instance.uniform(2, [(0,), (0, 1)], [1, 2])
    assert not any(is_proper_complete(inst, chi) for chi in [(1, 2), (2, 1), (1, 1), (2, 2)])


def test_color_outside_list_is_not_proper():
    inst = Instance(k=3, c_declared=0, n=2, edges=((0, 1),), lists=((1, 2), (1, 2)))
    assert not is_proper_complete(inst, (1, 3))


@given(st.data())
def test_proper_complete_means_nothing_active(data):
    inst = data.draw(instances())
    chi = tuple(data.draw(st.sampled_from(lst)) for lst in inst.lists)
    if is_proper_complete(inst, chi):
        cls = classify(inst, chi)
        assert not cls.active and not cls.improper


@given(st.data())
def test_creates_monochromatic_matches_classify(data):
    inst = data.draw(instances())
    chi = data.draw(partial_colorings(inst))
    if classify(inst, chi).improper:
        return
    v0 = [v for v, x in enumerate(chi) if x == 0]
    chosen = data.draw(st.lists(st.sampled_from(v0), unique=True)) if v0 else []
    assignment = {v: data.draw(st.sampled_from(inst.lists[v])) for v in chosen}
    expected = classify(inst, extend(chi, assignment)).improper
    assert creates_monochromatic(inst, chi, assignment) == expected


def test_instance_normalizes_order():
    a = Instance(k=2, c_declared=0, n=3, edges=((2, 0, 1),), lists=((2, 1),) * 3)
    assert a.edges == ((0, 1, 2),) and a.lists[0] == (1, 2)


def test_uniform_computes_c():
    rng = random.Random(3)
    edges = [tuple(sorted(rng.sample(range(8), 3))) for _ in range(6)]
    assert Instance.uniform(8, edges, [1, 2]).c_declared == naive_c(edges)
    assert compute_c(Instance.uniform(4, list(combinations(range(4), 2)), [1, 2])) == 1
