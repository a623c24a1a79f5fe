"""Decisions, solve results and recursion-tree instrumentation."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from enum import Enum

from .core import Coloring


class Decision(str, Enum):
    COLORABLE = "COLORABLE"
    UNCOLORABLE = "UNCOLORABLE"


@dataclass
class Stats:
    """Counters collected over one search.

    The root sits at depth 1.  A node is counted in phase I when its number
    of fully uncolored edges exceeds the solver's phase-I threshold, otherwise
    in phase II.
    """

    nodes_total: int = 0
    nodes_phase1: int = 0
    nodes_phase2: int = 0
    depth_max: int = 0
    derand_successes: int = 0
    probes: int = 0
    probe_followups: int = 0
    cleanups: int = 0
    branch_vertices: int = 0
    recurrence_violations: int = 0
    runtime_ms: float = 0.0

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=False)


@dataclass
class SolveResult:
    decision: Decision
    coloring: Coloring | None
    stats: Stats = field(default_factory=Stats)
    # number of recurrence checks performed, by rule tag
    rule_checks: dict[str, int] = field(default_factory=dict)

    @property
    def colorable(self) -> bool:
        return self.decision is Decision.COLORABLE
