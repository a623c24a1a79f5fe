"""Instances, partial colorings, edge classification and volume measures.

Vertices and edges are 0-based, colors are 1-based.  Edges and color lists are
kept both as sorted tuples and as integer bitmasks; all subfamilies of edges
(the parts ``H_0 .. H_k``) are sets of edge indices into the instance.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass
from functools import cached_property, reduce
from operator import and_

from .errors import (
    BadColor,
    DuplicateVertexInEdge,
    EmptyList,
    InvalidInstance,
    ListTooSmall,
    VertexOutOfRange,
)

MAX_COLORS = 64

Coloring = tuple[int, ...]


def bits(mask: int) -> Iterator[int]:
    """Yield the positions of the set bits of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(items: Iterable[int]) -> int:
    mask = 0
    for x in items:
        mask |= 1 << x
    return mask


@dataclass(frozen=True)
class Instance:
    """A hypergraph with per-vertex color lists.

    ``lists[v]`` is the tuple of admissible colors of vertex ``v``.
    ``c_declared`` is the claimed bound on the number of edges any edge is
    disjoint from.
    """

    k: int
    c_declared: int
    n: int
    edges: tuple[tuple[int, ...], ...]
    lists: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "edges", tuple(tuple(sorted(e)) for e in self.edges))
        object.__setattr__(self, "lists", tuple(tuple(sorted(lst)) for lst in self.lists))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_masks(self) -> tuple[int, ...]:
        return tuple(to_mask(e) for e in self.edges)

    @cached_property
    def list_masks(self) -> tuple[int, ...]:
        return tuple(to_mask(lst) for lst in self.lists)

    @cached_property
    def incidence(self) -> tuple[tuple[int, ...], ...]:
        """``incidence[v]`` lists the indices of the edges containing ``v``."""
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for idx, e in enumerate(self.edges):
            for v in e:
                inc[v].append(idx)
        return tuple(tuple(x) for x in inc)

    @classmethod
    def uniform(cls, n: int, edges: Iterable[Iterable[int]], colors: Iterable[int],
                k: int | None = None, c_declared: int | None = None) -> Instance:
        """Build an instance in which every vertex has the same list."""
        palette = tuple(sorted(colors))
        k = max(palette) if k is None else k
        inst = cls(k=k, c_declared=0, n=n, edges=tuple(tuple(e) for e in edges),
                   lists=(palette,) * n)
        if c_declared is None:
            c_declared = compute_c(inst)
        return cls(k=k, c_declared=c_declared, n=n, edges=inst.edges, lists=inst.lists)


@dataclass(frozen=True)
class Params:
    nu: int
    rho: int
    kappa: int
    m: int
    n: int


def validate(instance: Instance) -> Params:
    """Check ``instance`` and return its list-size parameters.

    Raises a subclass of :class:`InvalidInstance` on malformed input.
    """
    k, n = instance.k, instance.n
    if not 1 <= k <= MAX_COLORS:
        raise BadColor(f"k must lie in [1, {MAX_COLORS}], got {k}")
    if instance.c_declared < 0:
        raise InvalidInstance("declared c must be non-negative")
    if n < 0 or len(instance.lists) != n:
        raise InvalidInstance(f"expected {n} color lists, got {len(instance.lists)}")
    for v, lst in enumerate(instance.lists):
        if not lst:
            raise EmptyList(f"vertex {v} has an empty list")
        if len(set(lst)) != len(lst):
            raise BadColor(f"vertex {v} lists a color twice")
        for col in lst:
            if not 1 <= col <= k:
                raise BadColor(f"vertex {v} lists color {col} outside 1..{k}")
    for idx, e in enumerate(instance.edges):
        for v in e:
            if not 0 <= v < n:
                raise VertexOutOfRange(f"edge {idx} contains vertex {v} outside [0, {n})")
        if len(set(e)) != len(e):
            raise DuplicateVertexInEdge(f"edge {idx} repeats a vertex")

    sizes = [len(lst) for lst in instance.lists]
    if n == 0:
        return Params(nu=k, rho=k, kappa=0, m=instance.m, n=0)
    nu, rho = min(sizes), max(sizes)
    if nu < 2:
        raise ListTooSmall(f"every list needs at least 2 colors (min is {nu})")
    masks = instance.list_masks
    kappa = 0
    for u in range(n):
        mu = masks[u]
        for v in range(u + 1, n):
            kappa = max(kappa, (mu & masks[v]).bit_count())
            if kappa == rho:
                break
        if kappa == rho:
            break
    return Params(nu=nu, rho=rho, kappa=kappa, m=instance.m, n=n)


def compute_c(instance: Instance) -> int:
    """Largest number of other edges any single edge is disjoint from."""
    masks = instance.edge_masks
    best = 0
    for a, ma in enumerate(masks):
        count = sum(1 for b, mb in enumerate(masks) if b != a and not ma & mb)
        best = max(best, count)
    return best


@dataclass(frozen=True)
class Classification:
    """Active edges of ``H(chi)`` split by color trace.

    ``parts[0]`` holds the fully uncolored edges, ``parts[i]`` the edges whose
    colored vertices all carry color ``i`` and which still have an uncolored
    vertex.  Edges already seeing two distinct colors are inactive.
    ``improper`` is set when a fully colored edge is monochromatic (an empty
    edge counts as such).
    """

    chi: Coloring
    v0_mask: int
    active: frozenset[int]
    parts: tuple[frozenset[int], ...]
    improper: bool

    @property
    def v0(self) -> frozenset[int]:
        return frozenset(bits(self.v0_mask))

    def nonempty(self, start: int = 0) -> list[int]:
        return [i for i in range(start, len(self.parts)) if self.parts[i]]

    def part_of(self, e: int) -> int:
        for i, part in enumerate(self.parts):
            if e in part:
                return i
        raise KeyError(e)


def classify(instance: Instance, chi: Sequence[int]) -> Classification:
    chi = tuple(chi)
    v0_mask = to_mask(v for v, col in enumerate(chi) if col == 0)
    parts: list[set[int]] = [set() for _ in range(instance.k + 1)]
    improper = False
    for idx, e in enumerate(instance.edges):
        seen = 0
        color = 0
        free = False
        for v in e:
            col = chi[v]
            if col == 0:
                free = True
            elif col != color:
                seen += 1
                color = col
                if seen >= 2:
                    break
        if seen >= 2:
            continue
        if not free:
            improper = True
        else:
            parts[color].add(idx)
    frozen = tuple(frozenset(p) for p in parts)
    active = frozenset().union(*frozen)
    return Classification(chi=chi, v0_mask=v0_mask, active=active, parts=frozen,
                          improper=improper)


def trace_mask(instance: Instance, cls: Classification, e: int) -> int:
    """Uncolored vertices of edge ``e`` as a bitmask."""
    return instance.edge_masks[e] & cls.v0_mask


def degree(v: int, part: Iterable[int], instance: Instance) -> int:
    bit = 1 << v
    masks = instance.edge_masks
    return sum(1 for e in part if masks[e] & bit)


@dataclass(frozen=True)
class VolumeMeasure:
    mu1: int
    mu2: int
    t: int


def volumes(cls: Classification) -> VolumeMeasure:
    sizes = [len(p) for p in cls.parts]
    mu2 = 1
    for s in sizes:
        mu2 *= max(s, 1)
    return VolumeMeasure(mu1=sizes[0], mu2=mu2, t=sum(1 for s in sizes if s))


def is_proper_complete(instance: Instance, chi: Sequence[int]) -> bool:
    if len(chi) != instance.n:
        return False
    for v, col in enumerate(chi):
        if col not in instance.lists[v]:
            return False
    for e in instance.edges:
        if len(e) <= 1 or len({chi[v] for v in e}) < 2:
            return False
    return True


def extend(chi: Sequence[int], assignment: Mapping[int, int]) -> Coloring:
    out = list(chi)
    for v, col in assignment.items():
        out[v] = col
    return tuple(out)


def creates_monochromatic(instance: Instance, chi: Sequence[int],
                          assignment: Mapping[int, int]) -> bool:
    """True when applying ``assignment`` to ``chi`` completes a monochromatic edge.

    Only edges touching an assigned vertex are inspected, so ``chi`` itself is
    assumed proper.
    """
    def color(v: int) -> int:
        return assignment.get(v, chi[v])

    seen: set[int] = set()
    for v in assignment:
        for e in instance.incidence[v]:
            if e in seen:
                continue
            seen.add(e)
            colors = set()
            for u in instance.edges[e]:
                col = color(u)
                if col == 0:
                    break
                colors.add(col)
            else:
                if len(colors) < 2:
                    return True
    return False


def smallest_completion(instance: Instance, chi: Sequence[int], avoid: int = 0) -> Coloring:
    """Fill every uncolored vertex with its smallest list color other than ``avoid``."""
    out = list(chi)
    for v, col in enumerate(out):
        if col == 0:
            out[v] = next(c for c in instance.lists[v] if c != avoid)
    return tuple(out)


def common_colors(instance: Instance, vertices: Iterable[int]) -> int:
    """Bitmask of the colors shared by all lists of ``vertices``."""
    masks = instance.list_masks
    return reduce(and_, (masks[v] for v in vertices), ~0)
