"""Seeded random instances with a controlled intersection deficiency.

All generators draw from :class:`random.Random` (Mersenne Twister) seeded with
the given integer, so output is reproducible within this implementation only.
"""

from __future__ import annotations

import math
import random
from itertools import combinations

from .core import Instance, compute_c
from .errors import Infeasible, TooManyEdges

PRNG_ID = "python-random-mt19937"


def _random_lists(rng: random.Random, n: int, k: int) -> tuple[tuple[int, ...], ...]:
    """Uniform subsets of ``1..k`` with at least two colors."""
    subsets = [s for r in range(2, k + 1) for s in combinations(range(1, k + 1), r)]
    return tuple(rng.choice(subsets) for _ in range(n)) if k <= 12 else tuple(
        _rejection_list(rng, k) for _ in range(n))


def _rejection_list(rng: random.Random, k: int) -> tuple[int, ...]:
    while True:
        pick = tuple(c for c in range(1, k + 1) if rng.random() < 0.5)
        if len(pick) >= 2:
            return pick


def _majority_edges(rng: random.Random, vertices: list[int], m: int) -> list[tuple[int, ...]]:
    """``m`` distinct subsets of ``vertices`` of size above half, uniformly without replacement."""
    b = len(vertices)
    sizes = list(range(b // 2 + 1, b + 1))
    weights = [math.comb(b, s) for s in sizes]
    total = sum(weights)
    if m > total:
        raise TooManyEdges(f"only {total} majority subsets of {b} vertices exist, asked for {m}")
    if 2 * m > total:
        pool = [c for s in sizes for c in combinations(vertices, s)]
        return sorted(rng.sample(pool, m))
    chosen: set[tuple[int, ...]] = set()
    while len(chosen) < m:
        s = rng.choices(sizes, weights)[0]
        chosen.add(tuple(sorted(rng.sample(vertices, s))))
    return sorted(chosen)


def gen_intersecting(n: int, m: int, k: int, seed: int, *, full_lists: bool = False) -> Instance:
    """Pairwise intersecting instance: every edge holds more than half the vertices."""
    if n < 3 or m < 1 or k < 2:
        raise ValueError("need n >= 3, m >= 1, k >= 2")
    rng = random.Random(seed)
    edges = _majority_edges(rng, list(range(n)), m)
    lists = (tuple(range(1, k + 1)),) * n if full_lists else _random_lists(rng, n, k)
    return Instance(k=k, c_declared=0, n=n, edges=tuple(edges), lists=lists)


def gen_c_intersecting(n: int, m: int, k: int, c_target: int, seed: int, *,
                       full_lists: bool = False, retries: int = 100) -> Instance:
    """Instance whose intersection deficiency is exactly ``c_target``.

    ``c_target + 1`` pairwise disjoint edges are planted on reserved blocks of
    2 or 3 vertices.  Each remaining edge is a majority subset of the core
    block extended by one random vertex from every reserved block, so it meets
    every other core edge and every planted edge.
    """
    if c_target == 0:
        return gen_intersecting(n, m, k, seed, full_lists=full_lists)
    if c_target < 0 or k < 2:
        raise ValueError("need c_target >= 0 and k >= 2")
    planted = c_target + 1
    if m < planted:
        raise Infeasible(f"need at least {planted} edges for c = {c_target}")
    if n < 2 * planted + 1:
        raise Infeasible(f"n = {n} too small for c = {c_target}")
    rng = random.Random(seed)
    for _ in range(retries):
        blocks_sizes = [rng.choice((2, 3)) for _ in range(planted)]
        if n - sum(blocks_sizes) < 1:
            blocks_sizes = [2] * planted
        core_size = n - sum(blocks_sizes)
        order = list(range(n))
        rng.shuffle(order)
        core = order[:core_size]
        blocks, pos = [], core_size
        for size in blocks_sizes:
            blocks.append(sorted(order[pos:pos + size]))
            pos += size
        sizes = list(range(core_size // 2 + 1, core_size + 1))
        weights = [math.comb(core_size, s) for s in sizes]
        edges = {tuple(b) for b in blocks}
        for _ in range(50 * m):
            if len(edges) == m:
                break
            base = rng.sample(core, rng.choices(sizes, weights)[0])
            edges.add(tuple(sorted(base + [rng.choice(b) for b in blocks])))
        if len(edges) != m:
            continue
        lists = (tuple(range(1, k + 1)),) * n if full_lists else _random_lists(rng, n, k)
        inst = Instance(k=k, c_declared=c_target, n=n, edges=tuple(sorted(edges)), lists=lists)
        if compute_c(inst) == c_target:
            return inst
    raise Infeasible(f"could not plant c = {c_target} in {retries} attempts")


def gen_uncolorable(k: int, seed: int = 0) -> Instance:
    """Complete graph on ``k + 1`` vertices with full lists; uncolorable by pigeonhole.

    ``seed`` is accepted for a uniform generator interface; the output is fixed.
    """
    if k < 2:
        raise ValueError("need k >= 2")
    n = k + 1
    edges = tuple(combinations(range(n), 2))
    return Instance(k=k, c_declared=math.comb(k - 1, 2), n=n, edges=edges,
                    lists=(tuple(range(1, k + 1)),) * n)


def projective_plane(q: int) -> list[tuple[int, ...]]:
    """Lines of the projective plane over ``Z_q`` (``q`` prime) on ``q*q + q + 1`` points.

    Every point lies on ``q + 1`` lines and any two lines meet, so the family
    is intersecting with all degrees a ``1/q`` fraction of the edge count.
    """
    if q < 2 or any(q % d == 0 for d in range(2, math.isqrt(q) + 1)):
        raise ValueError(f"q must be prime, got {q}")
    pts = [(x, y, 1) for x in range(q) for y in range(q)]
    pts += [(x, 1, 0) for x in range(q)] + [(1, 0, 0)]
    return [tuple(i for i, (x, y, z) in enumerate(pts) if (a * x + b * y + c * z) % q == 0)
            for a, b, c in pts]


def gen_projective(q: int, k: int, seed: int, *, extra: int = 0,
                   full_lists: bool = False) -> Instance:
    """Projective-plane lines under a random relabeling, plus ``extra`` random edges.

    The extra edges have the line size ``q + 1`` and may be disjoint from some
    lines, so ``c_declared`` is recomputed exactly.
    """
    if k < 2:
        raise ValueError("need k >= 2")
    rng = random.Random(seed)
    lines = projective_plane(q)
    n = len(lines)
    perm = list(range(n))
    rng.shuffle(perm)
    edges = {tuple(sorted(perm[v] for v in line)) for line in lines}
    while len(edges) < n + extra:
        edges.add(tuple(sorted(rng.sample(range(n), q + 1))))
    lists = (tuple(range(1, k + 1)),) * n if full_lists else _random_lists(rng, n, k)
    inst = Instance(k=k, c_declared=0, n=n, edges=tuple(sorted(edges)), lists=lists)
    return Instance(k=k, c_declared=compute_c(inst), n=n, edges=inst.edges, lists=lists)


def gen_random(n: int, m: int, k: int, seed: int, *, min_size: int = 2,
               max_size: int | None = None) -> Instance:
    """Uniform-random small hypergraph with random lists; ``c_declared`` is exact."""
    rng = random.Random(seed)
    max_size = n if max_size is None else min(max_size, n)
    edges = []
    for _ in range(m):
        size = rng.randint(min_size, max_size)
        edges.append(tuple(sorted(rng.sample(range(n), size))))
    inst = Instance(k=k, c_declared=0, n=n, edges=tuple(edges), lists=_random_lists(rng, n, k))
    return Instance(k=k, c_declared=compute_c(inst), n=n, edges=inst.edges, lists=inst.lists)
