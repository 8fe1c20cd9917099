"""The labeled-graph engine: roses, wedges, folding, cores, pullbacks."""

from freefactors.graphs.folding import (
    core,
    core_size,
    core_vertices,
    fold,
    fold_raw,
    fold_with_map,
)
from freefactors.graphs.isomorphism import canonical, iso
from freefactors.graphs.metrics import diameter, girth, has_basis_loop, longest_label_run
from freefactors.graphs.models import (
    Edge,
    LabeledGraph,
    identify,
    loop_generators,
    loop_graph,
    rose,
    single_vertex,
    substitute,
    trace,
    tree_paths,
    wedge,
    wedge_of_loops,
)
from freefactors.graphs.pullback import PullbackComponent, pullback
from freefactors.graphs.serialization import dumps, loads, to_dot

__all__ = [
    "Edge",
    "LabeledGraph",
    "PullbackComponent",
    "canonical",
    "core",
    "core_size",
    "core_vertices",
    "diameter",
    "dumps",
    "fold",
    "fold_raw",
    "fold_with_map",
    "girth",
    "has_basis_loop",
    "identify",
    "iso",
    "loads",
    "longest_label_run",
    "loop_generators",
    "loop_graph",
    "pullback",
    "rose",
    "single_vertex",
    "substitute",
    "to_dot",
    "trace",
    "tree_paths",
    "wedge",
    "wedge_of_loops",
]
