"""Line-oriented text format and DOT export for labeled graphs.

Text format::

    n=3 base=0
    0 0 1
    0 1 2
"""

from __future__ import annotations

import re

from freefactors.exceptions import GraphError, GraphParseError
from freefactors.graphs.models import Edge, LabeledGraph, _has_collision

_HEADER = re.compile(r"^n=(\d+)\s+base=(\d+|none)$")


def dumps(g: LabeledGraph) -> str:
    base = "none" if g.basepoint is None else str(g.basepoint)
    lines = [f"n={g.rank} base={base}"]
    lines.extend(f"{e.src} {e.dst} {e.label}" for e in g.edges)
    return "\n".join(lines) + "\n"


def loads(text: str) -> LabeledGraph:
    rows = [(k, line.strip()) for k, line in enumerate(text.splitlines(), start=1)]
    rows = [(k, line) for k, line in rows if line and not line.startswith("#")]
    if not rows:
        raise GraphParseError(1, "missing header")
    line_no, header = rows[0]
    match = _HEADER.match(header)
    if match is None:
        raise GraphParseError(
            line_no, f"bad header {header!r}, expected n=<rank> base=<vertex|none>"
        )
    rank = int(match.group(1))
    base = None if match.group(2) == "none" else int(match.group(2))

    edges: list[Edge] = []
    vertices: set[int] = set() if base is None else {base}
    for line_no, line in rows[1:]:
        parts = line.split()
        if len(parts) != 3 or not all(p.isdigit() for p in parts):
            raise GraphParseError(line_no, f"expected 'src dst label', got {line!r}")
        src, dst, label = (int(p) for p in parts)
        edges.append(Edge(src, dst, label))
        vertices.update((src, dst))
    if not vertices:
        vertices = {0}
    try:
        return LabeledGraph(
            rank,
            tuple(sorted(vertices)),
            tuple(edges),
            base,
            folded=not _has_collision(tuple(edges)),
        )
    except GraphError as exc:
        raise GraphParseError(rows[0][0], exc.message) from exc


def to_dot(g: LabeledGraph, name: str = "core") -> str:
    """DOT digraph; edge labels a_i, inverse edges implied by arrow direction."""
    lines = [f"digraph {name} {{", "  rankdir=LR;", "  node [shape=circle];"]
    for v in g.vertices:
        shape = ' [shape=doublecircle]' if v == g.basepoint else ""
        lines.append(f'  "{v}"{shape};')
    for e in g.edges:
        lines.append(f'  "{e.src}" -> "{e.dst}" [label="a_{e.label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
