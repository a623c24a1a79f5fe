"""HLC text format for instances and solutions.

Instance layout ('#' starts a comment, blank lines are ignored)::

    HLC 1
    <k> <c_declared>
    <n> <m>
    <list of vertex 0>          one line per vertex, ascending colors
    ...
    <edge 0>                    one line per edge, ascending vertex ids
    ...

A lone ``-`` stands for an empty list or edge so such inputs survive a round
trip (they are then rejected by validation or treated as uncolorable).
"""

from __future__ import annotations

from collections.abc import Sequence

from .core import Coloring, Instance
from .errors import HLCSyntaxError
from .stats import Decision

FORMAT_VERSION = 1


def _content_lines(text: str) -> list[tuple[int, list[str]]]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append((lineno, line.split()))
    return out


def _ints(tokens: list[str], lineno: int) -> tuple[int, ...]:
    if tokens == ["-"]:
        return ()
    try:
        return tuple(int(t) for t in tokens)
    except ValueError:
        raise HLCSyntaxError(f"expected integers, got {' '.join(tokens)!r}", lineno) from None


def parse_instance(text: str) -> Instance:
    lines = _content_lines(text)
    if not lines:
        raise HLCSyntaxError("empty input", 1)
    lineno, header = lines[0]
    if len(header) != 2 or header[0] != "HLC":
        raise HLCSyntaxError("expected header 'HLC <version>'", lineno)
    if header[1] != str(FORMAT_VERSION):
        raise HLCSyntaxError(f"unsupported format version {header[1]}", lineno)

    def pair(idx: int, what: str) -> tuple[int, int]:
        if idx >= len(lines):
            raise HLCSyntaxError(f"missing '{what}' line", lines[-1][0] + 1)
        ln, toks = lines[idx]
        vals = _ints(toks, ln)
        if len(vals) != 2:
            raise HLCSyntaxError(f"expected '{what}'", ln)
        return vals

    k, c = pair(1, "<k> <c>")
    n, m = pair(2, "<n> <m>")
    if n < 0 or m < 0:
        raise HLCSyntaxError("negative counts", lines[2][0])
    body = lines[3:]
    if len(body) != n + m:
        last = lines[-1][0]
        raise HLCSyntaxError(f"expected {n} list lines and {m} edge lines, found {len(body)}",
                             last)
    lists = tuple(_ints(toks, ln) for ln, toks in body[:n])
    edges = tuple(_ints(toks, ln) for ln, toks in body[n:])
    return Instance(k=k, c_declared=c, n=n, edges=edges, lists=lists)


def _row(values: Sequence[int]) -> str:
    return " ".join(map(str, values)) if values else "-"


def render_instance(instance: Instance, comments: Sequence[str] = ()) -> str:
    out = [f"# {line}" for line in comments]
    out.append(f"HLC {FORMAT_VERSION}")
    out.append(f"{instance.k} {instance.c_declared}")
    out.append(f"{instance.n} {instance.m}")
    out.extend(_row(lst) for lst in instance.lists)
    out.extend(_row(e) for e in instance.edges)
    return "\n".join(out) + "\n"


def render_solution(decision: Decision, coloring: Coloring | None) -> str:
    if decision is Decision.COLORABLE:
        return f"COLORABLE\n{' '.join(map(str, coloring))}\n"
    return "UNCOLORABLE\n"


def parse_solution(text: str) -> tuple[Decision, Coloring | None]:
    lines = _content_lines(text)
    if not lines:
        raise HLCSyntaxError("empty solution", 1)
    lineno, head = lines[0]
    if head == ["UNCOLORABLE"]:
        return Decision.UNCOLORABLE, None
    if head != ["COLORABLE"]:
        raise HLCSyntaxError("expected COLORABLE or UNCOLORABLE", lineno)
    if len(lines) < 2:
        return Decision.COLORABLE, ()
    ln, toks = lines[1]
    return Decision.COLORABLE, _ints(toks, ln)
