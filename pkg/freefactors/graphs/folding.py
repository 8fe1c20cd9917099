"""Stallings folding and cores.

Folding merges vertices with a union-find forest. Each root keeps one
outgoing and one incoming target per label; attaching an edge whose slot
is already taken schedules the two far endpoints for merging. Draining
that worklist yields the maximal fold, whatever order the merges run in.
"""

from __future__ import annotations

import random

from freefactors.core.logging import get_log_context, get_logger
from freefactors.exceptions import EmptyCoreError, MissingBasepointError
from freefactors.graphs.isomorphism import canonical, canonical_order, relabel
from freefactors.graphs.models import Edge, LabeledGraph

logger = get_logger(__name__)


class _Folder:
    """Union-find state of one fold run."""

    def __init__(self, vertices: tuple[int, ...], rng: random.Random | None):
        self.parent = {v: v for v in vertices}
        self.size = dict.fromkeys(vertices, 1)
        self.out: dict[int, dict[int, int]] = {v: {} for v in vertices}
        self.inn: dict[int, dict[int, int]] = {v: {} for v in vertices}
        self.pending: list[tuple[int, int]] = []
        self.rng = rng
        self.merges = 0

    def find(self, v: int) -> int:
        parent = self.parent
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    def attach(self, src: int, dst: int, label: int) -> None:
        src, dst = self.find(src), self.find(dst)
        target = self.out[src].get(label)
        if target is None:
            self.out[src][label] = dst
        else:
            self.pending.append((target, dst))
        source = self.inn[dst].get(label)
        if source is None:
            self.inn[dst][label] = src
        else:
            self.pending.append((source, src))

    def union(self, a: int, b: int) -> None:
        a, b = self.find(a), self.find(b)
        if a == b:
            return
        if self.size[a] < self.size[b]:
            a, b = b, a
        self.parent[b] = a
        self.size[a] += self.size[b]
        self.merges += 1
        for table in (self.out, self.inn):
            moved = table.pop(b)
            keep = table[a]
            for label, far in moved.items():
                current = keep.get(label)
                if current is None:
                    keep[label] = far
                else:
                    self.pending.append((current, far))

    def drain(self) -> None:
        while self.pending:
            if self.rng is None:
                a, b = self.pending.pop()
            else:
                k = self.rng.randrange(len(self.pending))
                self.pending[k], self.pending[-1] = self.pending[-1], self.pending[k]
                a, b = self.pending.pop()
            self.union(a, b)


def fold_raw(
    g: LabeledGraph, rng: random.Random | None = None
) -> tuple[LabeledGraph, dict[int, int]]:
    """Maximal fold without canonical renumbering, plus the vertex quotient map."""
    folder = _Folder(g.vertices, rng)
    edges = list(g.edges)
    if rng is not None:
        rng.shuffle(edges)
    for edge in edges:
        folder.attach(*edge)
        if rng is None or rng.random() < 0.5:
            folder.drain()
    folder.drain()

    roots = tuple(sorted({folder.find(v) for v in g.vertices}))
    folded_edges = tuple(
        Edge(root, folder.find(far), label)
        for root in roots
        for label, far in folder.out[root].items()
    )
    base = None if g.basepoint is None else folder.find(g.basepoint)
    result = LabeledGraph(g.rank, roots, folded_edges, base, folded=True)
    if folder.merges:
        logger.debug(
            "folded graph",
            extra=get_log_context(
                rank=g.rank, operation="fold", merges=folder.merges, edges=len(folded_edges)
            ),
        )
    return result, {v: folder.find(v) for v in g.vertices}


def fold_with_map(
    g: LabeledGraph, rng: random.Random | None = None
) -> tuple[LabeledGraph, dict[int, int]]:
    """Canonical fold(g) and the image of every vertex of g in it."""
    raw, quotient = fold_raw(g, rng)
    order = canonical_order(raw)
    return relabel(raw, order), {v: order[r] for v, r in quotient.items()}


def fold(g: LabeledGraph, rng: random.Random | None = None) -> LabeledGraph:
    """fold(Γ): maximal Stallings fold, canonically renumbered.

    ``rng`` randomizes the order in which edges are attached and
    collisions are resolved; the result does not depend on it.
    """
    return fold_with_map(g, rng)[0]


def _trimmed(g: LabeledGraph, keep: int | None) -> tuple[list[int], list[int]]:
    valence = {v: g.valence(v) for v in g.vertices}
    alive = set(range(g.num_edges))
    removed: set[int] = set()
    stack = [v for v in g.vertices if valence[v] <= 1 and v != keep]
    while stack:
        v = stack.pop()
        if v in removed or v == keep or valence[v] > 1:
            continue
        removed.add(v)
        for step in g.incidence[v]:
            if step.edge not in alive:
                continue
            alive.discard(step.edge)
            valence[step.target] -= 1
            w = step.target
            if valence[w] <= 1 and w != keep and w not in removed:
                stack.append(w)
    vertices = [v for v in g.vertices if v not in removed]
    return vertices, sorted(alive)


def core(g: LabeledGraph, pointed: bool = True) -> LabeledGraph:
    """core_*(Γ) when pointed, else the unpointed core(Γ)."""
    if pointed and g.basepoint is None:
        raise MissingBasepointError("pointed core")
    vertices, alive = _trimmed(g, g.basepoint if pointed else None)
    if not vertices:
        raise EmptyCoreError()
    trimmed = LabeledGraph(
        g.rank,
        tuple(vertices),
        tuple(g.edges[k] for k in alive),
        g.basepoint if pointed else None,
        g.folded,
    )
    return canonical(trimmed)


def core_size(g: LabeledGraph) -> int:
    """Edge count of the unpointed core of fold(g), without renumbering."""
    raw, _ = fold_raw(g)
    _, alive = _trimmed(raw, None)
    return len(alive)


def core_vertices(g: LabeledGraph) -> list[int]:
    """Vertices of g lying on its unpointed core, in g's own numbering."""
    return _trimmed(g, None)[0]
