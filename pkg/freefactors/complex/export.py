"""DOT renderings of apartments (as posets) and of the snop cube."""

from __future__ import annotations

from freefactors.complex.models import Apartment, SnopCube, proper_subsets


def _quote(text: str) -> str:
    return '"' + text.replace('"', '\\"') + '"'


def to_dot(ap: Apartment, name: str = "apartment") -> str:
    """Hasse diagram of the apartment, ranks as layers, covering relations as edges."""
    lines = [f"graph {name} {{", "  rankdir=BT;", "  node [shape=box];"]
    subsets = proper_subsets(ap.n)
    ids = {s: "v" + "".join(map(str, sorted(s))) for s in subsets}
    for size in range(1, ap.n):
        layer = [s for s in subsets if len(s) == size]
        lines.append("  { rank=same; " + " ".join(ids[s] for s in layer) + "; }")
        for s in layer:
            lines.append(f"  {ids[s]} [label={_quote(ap.vertex(*s).label)}];")
    for small in subsets:
        for large in subsets:
            if small < large and len(large) == len(small) + 1:
                lines.append(f"  {ids[small]} -- {ids[large]};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def cube_to_dot(cube: SnopCube, name: str = "snops") -> str:
    """Snops as vertices labeled by their sticks, cube edges between them."""
    lines = [f"graph {name} {{", "  node [shape=ellipse];"]
    for k, snop in enumerate(cube.snops):
        label = " ".join(str(s.word) for s in snop.sticks)
        lines.append(f"  s{k} [label={_quote(label)}];")
    for a, b in cube.edges:
        lines.append(f"  s{a} -- s{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"
