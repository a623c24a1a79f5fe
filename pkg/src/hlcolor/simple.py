"""Simple assignments: per-edge forced choices that clear a whole part at once."""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass
from itertools import combinations

from .core import Classification, Instance, bits, creates_monochromatic, trace_mask
from .errors import EmptyPart


@dataclass(frozen=True)
class SimpleAssignment:
    """Colors for some uncolored vertices; ``kind`` is the part index it clears."""

    assignment: dict[int, int]
    kind: int


def _edge_choices(instance: Instance, trace: list[int], i: int) -> Iterator[dict[int, int]]:
    lists = instance.lists
    if i:
        for v in trace:
            for col in lists[v]:
                if col != i:
                    yield {v: col}
        return
    for a, b in combinations(trace, 2):
        for ca in lists[a]:
            for cb in lists[b]:
                if ca != cb:
                    yield {a: ca, b: cb}


def enumerate_simple(cls: Classification, instance: Instance, i: int, *,
                     proper_only: bool = False) -> Iterator[SimpleAssignment]:
    """Stream the consistent ``i``-simple assignments for ``parts[i]``.

    For ``i = 0`` each edge picks two uncolored vertices with two distinct
    list colors; for ``i >= 1`` each edge picks one uncolored vertex and a
    list color other than ``i``.  Edges are visited in index order, vertices and
    colors ascending.  Choices giving one vertex two colors are dropped, an edge
    already cleared by earlier choices contributes nothing, and repeated
    assignments are emitted once.  With ``proper_only`` a branch is cut as soon
    as it completes a monochromatic edge.
    """
    part = sorted(cls.parts[i])
    if not part:
        raise EmptyPart(f"part {i} is empty")
    traces = [list(bits(trace_mask(instance, cls, e))) for e in part]
    work = list(cls.chi)
    assign: dict[int, int] = {}
    emitted: set[frozenset[tuple[int, int]]] = set()

    def cleared(trace: list[int]) -> bool:
        if i:
            return any(v in assign for v in trace)
        return len({assign[v] for v in trace if v in assign}) >= 2

    def walk(pos: int) -> Iterator[SimpleAssignment]:
        if pos == len(part):
            key = frozenset(assign.items())
            if key not in emitted:
                emitted.add(key)
                yield SimpleAssignment(dict(assign), i)
            return
        trace = traces[pos]
        if cleared(trace):
            yield from walk(pos + 1)
            return
        for choice in _edge_choices(instance, trace, i):
            if any(assign.get(v, col) != col for v, col in choice.items()):
                continue
            new = {v: col for v, col in choice.items() if v not in assign}
            if proper_only and new and creates_monochromatic(instance, work, new):
                continue
            for v, col in new.items():
                assign[v] = col
                work[v] = col
            yield from walk(pos + 1)
            for v in new:
                del assign[v]
                work[v] = 0

    return walk(0)
