"""Exact expected monochromatic-edge counts and the conditional-expectation greedy.

Every uncolored vertex is imagined to pick a color uniformly from its list.
All probabilities are exact :class:`fractions.Fraction` values because the
``< 1`` test on the expectation decides whether a coloring is guaranteed.
"""

from __future__ import annotations

from collections.abc import Sequence
from fractions import Fraction

from .core import Coloring, Instance, classify, common_colors
from .errors import ImproperInput, PreconditionViolated


def edge_probability(instance: Instance, e: int, chi: Sequence[int]) -> Fraction:
    """Probability that edge ``e`` ends monochromatic given the partial coloring ``chi``."""
    color = 0
    free = []
    for v in instance.edges[e]:
        col = chi[v]
        if col == 0:
            free.append(v)
        elif color == 0:
            color = col
        elif col != color:
            return Fraction(0)
    if not free:
        return Fraction(1)
    shared = common_colors(instance, free)
    denom = 1
    for v in free:
        denom *= len(instance.lists[v])
    if color:
        return Fraction(1, denom) if shared >> color & 1 else Fraction(0)
    return Fraction(shared.bit_count(), denom)


def conditional_expectation(instance: Instance, chi: Sequence[int]) -> Fraction:
    """Expected number of monochromatic edges; fully colored bad edges count 1."""
    return sum((edge_probability(instance, e, chi) for e in range(instance.m)), Fraction(0))


def expected_monochromatic(instance: Instance, chi: Sequence[int]) -> Fraction:
    if classify(instance, chi).improper:
        raise ImproperInput("partial coloring already has a monochromatic edge")
    return conditional_expectation(instance, chi)


def derandomize(instance: Instance, chi: Sequence[int]) -> Coloring:
    """Complete ``chi`` greedily so the conditional expectation never increases.

    Vertices are fixed in ascending order; each takes the list color with the
    smallest resulting expectation (ties to the smaller color).  Only edges
    through the vertex change, so the comparison is restricted to them.
    When the starting expectation is below 1 the result is proper.
    """
    out = list(chi)
    for v in range(instance.n):
        if out[v]:
            continue
        best_color, best_value = 0, None
        for col in instance.lists[v]:
            out[v] = col
            value = sum((edge_probability(instance, e, out) for e in instance.incidence[v]),
                        Fraction(0))
            if best_value is None or value < best_value:
                best_color, best_value = col, value
        out[v] = best_color
    return tuple(out)


def avoid_color_extension(instance: Instance, chi: Sequence[int], i: int) -> Coloring:
    """Complete ``chi`` using, at every uncolored vertex, its smallest color other than ``i``.

    Valid when the only active edges are those whose colored vertices all
    carry color ``i``; each such edge then receives a second color.
    """
    cls = classify(instance, chi)
    if cls.improper:
        raise PreconditionViolated("partial coloring is improper")
    others = [j for j in cls.nonempty() if j != i]
    if others:
        raise PreconditionViolated(f"parts {others} are non-empty besides part {i}")
    out = list(chi)
    for v, col in enumerate(out):
        if col:
            continue
        choice = next((c for c in instance.lists[v] if c != i), None)
        if choice is None:
            raise PreconditionViolated(f"vertex {v} has no color other than {i}")
        out[v] = choice
    return tuple(out)
