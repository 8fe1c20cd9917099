"""Canonical renumbering and labeled isomorphism.

In a folded connected graph every (vertex, letter) pair has at most one
continuation, so a BFS that explores steps in (label, direction) order
numbers the vertices independently of their ids. Comparing those
numberings decides labeled isomorphism.
"""

from __future__ import annotations

from collections import deque

from freefactors.exceptions import MissingBasepointError, NotFoldedError
from freefactors.graphs.models import Edge, LabeledGraph


def bfs_order(g: LabeledGraph, root: int) -> dict[int, int]:
    order = {root: 0}
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for step in g.incidence[v]:
            if step.target not in order:
                order[step.target] = len(order)
                queue.append(step.target)
    return order


def _relabeled_edges(g: LabeledGraph, order: dict[int, int]) -> tuple[Edge, ...]:
    return tuple(sorted(Edge(order[e.src], order[e.dst], e.label) for e in g.edges))


def relabel(g: LabeledGraph, order: dict[int, int]) -> LabeledGraph:
    base = None if g.basepoint is None else order[g.basepoint]
    return LabeledGraph(
        g.rank,
        tuple(range(len(order))),
        _relabeled_edges(g, order),
        base,
        g.folded,
    )


def canonical_order(g: LabeledGraph) -> dict[int, int]:
    """BFS numbering from the basepoint, or the least numbering over all roots."""
    if g.basepoint is not None:
        return bfs_order(g, g.basepoint)
    best: dict[int, int] | None = None
    best_edges: tuple[Edge, ...] | None = None
    for root in g.vertices:
        order = bfs_order(g, root)
        edges = _relabeled_edges(g, order)
        if best_edges is None or edges < best_edges:
            best, best_edges = order, edges
    assert best is not None
    return best


def canonical(g: LabeledGraph) -> LabeledGraph:
    return relabel(g, canonical_order(g))


def iso(
    g1: LabeledGraph, g2: LabeledGraph, respect_basepoint: bool = True
) -> dict[int, int] | None:
    """Label- and orientation-preserving isomorphism g1 → g2, or None."""
    if not (g1.folded and g2.folded):
        raise NotFoldedError("iso")
    if (g1.rank, g1.num_vertices, g1.num_edges) != (g2.rank, g2.num_vertices, g2.num_edges):
        return None
    if respect_basepoint:
        if g1.basepoint is None or g2.basepoint is None:
            raise MissingBasepointError("pointed isomorphism")
        return _match(g1, bfs_order(g1, g1.basepoint), g2, g2.basepoint)
    order1 = bfs_order(g1, g1.vertices[0])
    for root in g2.vertices:
        found = _match(g1, order1, g2, root)
        if found is not None:
            return found
    return None


def _match(
    g1: LabeledGraph, order1: dict[int, int], g2: LabeledGraph, root2: int
) -> dict[int, int] | None:
    order2 = bfs_order(g2, root2)
    if _relabeled_edges(g1, order1) != _relabeled_edges(g2, order2):
        return None
    position = {k: v for v, k in order2.items()}
    return {v: position[k] for v, k in order1.items()}
