"""Fiber product of two folded graphs over the rose."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field

import networkx as nx

from freefactors.exceptions import GraphError, NotFoldedError
from freefactors.graphs.isomorphism import canonical_order, relabel
from freefactors.graphs.models import Edge, LabeledGraph


@dataclass(frozen=True)
class PullbackComponent:
    """A connected component of the pullback.

    ``based`` marks the component of the pair of basepoints; its pointed
    core is core_*(H₁ ∩ H₂). Other nontrivial components carry the
    intersections of H₁ with conjugates of H₂. ``pairs`` lists, for each
    vertex of ``graph``, the pair of vertices of the factors it lies over.
    """

    graph: LabeledGraph
    based: bool
    pairs: tuple[tuple[int, int], ...] = field(default=(), compare=False)

    @property
    def rank(self) -> int:
        return self.graph.euler_rank

    @property
    def nontrivial(self) -> bool:
        return self.rank > 0


def pullback(g1: LabeledGraph, g2: LabeledGraph) -> list[PullbackComponent]:
    if not (g1.folded and g2.folded):
        raise NotFoldedError("pullback")
    if g1.rank != g2.rank:
        raise GraphError(f"cannot pull back graphs of rank {g1.rank} and {g2.rank}")

    by_label: dict[int, list[Edge]] = defaultdict(list)
    for edge in g2.edges:
        by_label[edge.label].append(edge)

    product = nx.MultiGraph()
    base = None
    if g1.basepoint is not None and g2.basepoint is not None:
        base = (g1.basepoint, g2.basepoint)
        product.add_node(base)
    product_edges: list[tuple[tuple[int, int], tuple[int, int], int]] = []
    for e1 in g1.edges:
        for e2 in by_label[e1.label]:
            src, dst = (e1.src, e2.src), (e1.dst, e2.dst)
            product.add_edge(src, dst)
            product_edges.append((src, dst, e1.label))

    components: list[PullbackComponent] = []
    for nodes in nx.connected_components(product):
        ids = {pair: k for k, pair in enumerate(sorted(nodes))}
        edges = tuple(Edge(ids[s], ids[d], label) for s, d, label in product_edges if s in ids)
        based = base is not None and base in ids
        graph = LabeledGraph(
            g1.rank,
            tuple(range(len(ids))),
            edges,
            ids[base] if based else None,
            folded=True,
        )
        order = canonical_order(graph)
        position = {k: pair for pair, k in ids.items()}
        pairs = tuple(position[v] for v, _ in sorted(order.items(), key=lambda item: item[1]))
        components.append(PullbackComponent(relabel(graph, order), based, pairs))
    components.sort(key=lambda c: (not c.based, -c.rank, c.graph.num_vertices, c.graph.edges))
    return components
