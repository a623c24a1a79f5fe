"""Exact list coloring of c-intersecting hypergraphs."""

from .core import (
    Classification,
    Instance,
    Params,
    VolumeMeasure,
    classify,
    compute_c,
    degree,
    is_proper_complete,
    validate,
    volumes,
)
from .derandomize import avoid_color_extension, derandomize, expected_monochromatic
from .oracle import count_proper, solve_brute
from .solver_a import solve_a
from .solver_b import params_for, solve_b, xi_solve
from .stats import Decision, SolveResult, Stats

__all__ = [
    "Classification",
    "Decision",
    "Instance",
    "Params",
    "SolveResult",
    "Stats",
    "VolumeMeasure",
    "avoid_color_extension",
    "classify",
    "compute_c",
    "count_proper",
    "degree",
    "derandomize",
    "expected_monochromatic",
    "is_proper_complete",
    "params_for",
    "solve_a",
    "solve_b",
    "solve_brute",
    "validate",
    "volumes",
    "xi_solve",
]
