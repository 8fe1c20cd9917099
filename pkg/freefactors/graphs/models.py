"""Labeled graphs over the rose R_n.

A labeled graph is a connected directed graph whose edges carry basis
labels 1..n; reading an edge backwards reads the inverse letter. All
graphs are immutable values; every operation returns a fresh graph.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple

from freefactors.exceptions import (
    GraphError,
    MapError,
    MissingBasepointError,
    NotFoldedError,
    VertexNotFoundError,
)
from freefactors.words import BasisMap, Word


class Edge(NamedTuple):
    src: int
    dst: int
    label: int


class Step(NamedTuple):
    """One way of leaving a vertex: signed letter, far endpoint, edge index."""

    letter: int
    target: int
    edge: int


def _step_key(step: Step) -> tuple[int, int, int, int]:
    return (abs(step.letter), 0 if step.letter > 0 else 1, step.target, step.edge)


@dataclass(frozen=True)
class LabeledGraph:
    rank: int
    vertices: tuple[int, ...]
    edges: tuple[Edge, ...]
    basepoint: int | None = None
    folded: bool = False

    def __post_init__(self) -> None:
        if self.rank < 1:
            raise GraphError(f"graph rank must be at least 1, got {self.rank}")
        if not self.vertices:
            raise GraphError("a labeled graph needs at least one vertex")
        vertex_set = set(self.vertices)
        if len(vertex_set) != len(self.vertices):
            raise GraphError("duplicate vertex ids")
        for edge in self.edges:
            if not 1 <= edge.label <= self.rank:
                raise GraphError(f"edge label {edge.label} outside 1..{self.rank}")
            for v in (edge.src, edge.dst):
                if v not in vertex_set:
                    raise VertexNotFoundError(v)
        if self.basepoint is not None and self.basepoint not in vertex_set:
            raise VertexNotFoundError(self.basepoint)
        if not self._is_connected():
            raise GraphError("labeled graphs must be connected")
        if self.folded and _has_collision(self.edges):
            raise GraphError("graph flagged folded has a label collision")

    def _is_connected(self) -> bool:
        seen = {self.vertices[0]}
        queue = deque(seen)
        while queue:
            v = queue.popleft()
            for step in self.incidence[v]:
                if step.target not in seen:
                    seen.add(step.target)
                    queue.append(step.target)
        return len(seen) == len(self.vertices)

    @cached_property
    def incidence(self) -> dict[int, list[Step]]:
        """Steps out of every vertex, sorted by (label, direction)."""
        table: dict[int, list[Step]] = {v: [] for v in self.vertices}
        for k, edge in enumerate(self.edges):
            table[edge.src].append(Step(edge.label, edge.dst, k))
            table[edge.dst].append(Step(-edge.label, edge.src, k))
        for steps in table.values():
            steps.sort(key=_step_key)
        return table

    @cached_property
    def _moves(self) -> dict[tuple[int, int], int]:
        return {(v, s.letter): s.target for v, steps in self.incidence.items() for s in steps}

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @property
    def euler_rank(self) -> int:
        """E − V + 1, the rank of the fundamental group."""
        return len(self.edges) - len(self.vertices) + 1

    def valence(self, v: int) -> int:
        return len(self.incidence[v])

    def step(self, v: int, letter: int) -> int | None:
        """Endpoint of the unique edge leaving v reading ``letter`` (folded graphs)."""
        return self._moves.get((v, letter))

    def with_basepoint(self, v: int | None) -> LabeledGraph:
        return LabeledGraph(self.rank, self.vertices, self.edges, v, self.folded)


def _has_collision(edges: tuple[Edge, ...]) -> bool:
    outgoing: set[tuple[int, int]] = set()
    incoming: set[tuple[int, int]] = set()
    for edge in edges:
        out_key = (edge.src, edge.label)
        in_key = (edge.dst, edge.label)
        if out_key in outgoing or in_key in incoming:
            return True
        outgoing.add(out_key)
        incoming.add(in_key)
    return False


def rose(n: int) -> LabeledGraph:
    """One vertex (the basepoint) with a loop for every label."""
    return LabeledGraph(n, (0,), tuple(Edge(0, 0, i) for i in range(1, n + 1)), 0, folded=True)


def single_vertex(n: int) -> LabeledGraph:
    """The graph of the trivial subgroup."""
    return LabeledGraph(n, (0,), (), 0, folded=True)


def _path_edges(
    letters: tuple[int, ...], start: int, end: int, fresh: int
) -> tuple[list[Edge], int]:
    """Edges of a subdivided path reading ``letters`` from start to end."""
    edges: list[Edge] = []
    current = start
    for k, x in enumerate(letters):
        if k == len(letters) - 1:
            nxt = end
        else:
            nxt = fresh
            fresh += 1
        edges.append(Edge(current, nxt, x) if x > 0 else Edge(nxt, current, -x))
        current = nxt
    return edges, fresh


def loop_graph(w: Word, n: int) -> LabeledGraph:
    """Subdivided loop at the basepoint reading w; a lollipop once folded."""
    if w.is_trivial:
        return single_vertex(n)
    if w.max_index > n:
        raise GraphError(f"word {w} uses letters beyond rank {n}")
    edges, fresh = _path_edges(w.letters, 0, 0, 1)
    return LabeledGraph(n, tuple(range(fresh)), tuple(edges), 0)


def wedge(g1: LabeledGraph, g2: LabeledGraph) -> LabeledGraph:
    """Disjoint union with the two basepoints identified."""
    if g1.basepoint is None or g2.basepoint is None:
        raise MissingBasepointError("wedge")
    if g1.rank != g2.rank:
        raise GraphError(f"cannot wedge graphs of rank {g1.rank} and {g2.rank}")
    offset = max(g1.vertices) + 1
    relabel = {v: (g1.basepoint if v == g2.basepoint else v + offset) for v in g2.vertices}
    vertices = g1.vertices + tuple(relabel[v] for v in g2.vertices if v != g2.basepoint)
    edges = g1.edges + tuple(Edge(relabel[e.src], relabel[e.dst], e.label) for e in g2.edges)
    return LabeledGraph(g1.rank, vertices, edges, g1.basepoint)


def wedge_of_loops(words: list[Word], n: int) -> LabeledGraph:
    graph = single_vertex(n)
    for w in words:
        if not w.is_trivial:
            graph = wedge(graph, loop_graph(w, n))
    return graph


def identify(g: LabeledGraph, v0: int, v1: int) -> LabeledGraph:
    """Quotient identifying v1 with v0; the result is not flagged folded."""
    for v in (v0, v1):
        if v not in g.incidence:
            raise VertexNotFoundError(v)
    if v0 == v1:
        raise GraphError("identify needs two distinct vertices")

    def image(v: int) -> int:
        return v0 if v == v1 else v

    vertices = tuple(v for v in g.vertices if v != v1)
    edges = tuple(Edge(image(e.src), image(e.dst), e.label) for e in g.edges)
    base = None if g.basepoint is None else image(g.basepoint)
    return LabeledGraph(g.rank, vertices, edges, base)


def substitute(g: LabeledGraph, m: BasisMap) -> LabeledGraph:
    """Replace each a_i-edge by a subdivided path reading m(a_i).

    The fundamental group of the result is the image of that of g under m.
    """
    if m.rank != g.rank:
        raise MapError(f"map of rank {m.rank} applied to graph of rank {g.rank}")
    fresh = max(g.vertices) + 1
    edges: list[Edge] = []
    for edge in g.edges:
        image = m.images[edge.label - 1]
        if image.is_trivial:
            raise MapError(f"image of a_{edge.label} is trivial")
        path, fresh = _path_edges(image.letters, edge.src, edge.dst, fresh)
        edges.extend(path)
    vertices = g.vertices + tuple(range(max(g.vertices) + 1, fresh))
    return LabeledGraph(g.rank, vertices, tuple(edges), g.basepoint)


def trace(g: LabeledGraph, start: int, w: Word) -> int | None:
    """Endpoint of the path reading w from ``start``, or None if it falls off."""
    if not g.folded:
        raise NotFoldedError("trace")
    if start not in g.incidence:
        raise VertexNotFoundError(start)
    v: int | None = start
    for x in w.letters:
        v = g.step(v, x)
        if v is None:
            return None
    return v


def tree_paths(g: LabeledGraph, root: int) -> tuple[dict[int, Word], set[int]]:
    """BFS spanning tree from ``root``: tree-path label to each vertex and tree edge ids."""
    labels: dict[int, Word] = {root: Word()}
    tree_edges: set[int] = set()
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for step in g.incidence[v]:
            if step.target in labels:
                continue
            labels[step.target] = labels[v] * Word((step.letter,))
            tree_edges.add(step.edge)
            queue.append(step.target)
    return labels, tree_edges


def loop_generators(g: LabeledGraph, root: int) -> list[Word]:
    """Free basis of π₁(g, root), one generator per non-tree edge in edge order."""
    labels, tree_edges = tree_paths(g, root)
    return [
        labels[e.src] * Word((e.label,)) * labels[e.dst].inverse()
        for k, e in enumerate(g.edges)
        if k not in tree_edges
    ]
