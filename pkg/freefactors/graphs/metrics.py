"""Graph measures: girth, diameter, basis loops and label runs."""

from __future__ import annotations

import math
from collections import Counter

import networkx as nx

from freefactors.exceptions import AcyclicGraphError, NotFoldedError
from freefactors.graphs.models import LabeledGraph


def underlying_graph(g: LabeledGraph) -> nx.Graph:
    simple = nx.Graph()
    simple.add_nodes_from(g.vertices)
    simple.add_edges_from((e.src, e.dst) for e in g.edges if e.src != e.dst)
    return simple


def girth(g: LabeledGraph) -> int:
    """Length of the shortest cycle of the underlying undirected graph."""
    if not g.folded:
        raise NotFoldedError("girth")
    if any(e.src == e.dst for e in g.edges):
        return 1
    parallel = Counter(frozenset((e.src, e.dst)) for e in g.edges)
    if any(count > 1 for count in parallel.values()):
        return 2
    value = nx.girth(underlying_graph(g))
    if value == math.inf:
        raise AcyclicGraphError()
    return int(value)


def diameter(g: LabeledGraph) -> int:
    if g.num_vertices == 1:
        return 0
    return nx.diameter(underlying_graph(g))


def has_basis_loop(g: LabeledGraph, i: int) -> int | None:
    """A vertex carrying a length-1 loop labeled a_i, or None."""
    if not g.folded:
        raise NotFoldedError("has_basis_loop")
    for edge in g.edges:
        if edge.label == i and edge.src == edge.dst:
            return edge.src
    return None


def longest_label_run(g: LabeledGraph, i: int) -> int | None:
    """Longest directed path in the a_i-labeled subgraph.

    None when that subgraph contains a cycle, i.e. a_i-runs are unbounded.
    """
    runs = nx.DiGraph()
    for edge in g.edges:
        if edge.label != i:
            continue
        if edge.src == edge.dst:
            return None
        runs.add_edge(edge.src, edge.dst)
    if runs.number_of_edges() == 0:
        return 0
    if not nx.is_directed_acyclic_graph(runs):
        return None
    return nx.dag_longest_path_length(runs)
