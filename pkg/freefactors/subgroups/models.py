"""Subgroups of F_n as core graphs, and the records the calculus returns."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Literal

from freefactors.exceptions import (
    MissingBasepointError,
    SubgroupError,
    TrivialSubgroupError,
)
from freefactors.graphs import LabeledGraph, canonical, core, loop_generators
from freefactors.words import Word


class Mode(str, Enum):
    """AF_n works with subgroups; OF_n with their conjugacy classes."""

    AF = "af"
    OF = "of"


@dataclass(frozen=True)
class Subgroup:
    """A finitely generated subgroup held as its folded core graph.

    Pointed subgroups keep core_*(H) with its basepoint; unpointed ones
    keep core(H) and stand for the conjugacy class. Graphs are stored
    canonically numbered, so equality is labeled isomorphism.
    """

    graph: LabeledGraph
    pointed: bool

    def __post_init__(self) -> None:
        g = self.graph
        if not g.folded:
            raise SubgroupError("subgroup graphs must be folded")
        if self.pointed and g.basepoint is None:
            raise MissingBasepointError("pointed subgroup")
        if not self.pointed and g.basepoint is not None:
            raise SubgroupError("unpointed subgroup graph carries a basepoint")
        for v in g.vertices:
            if g.valence(v) == 1 and v != g.basepoint:
                raise SubgroupError(f"graph is not a core: vertex {v} has valence 1")
        if not self.pointed and g.euler_rank == 0:
            raise TrivialSubgroupError("the trivial subgroup has no unpointed core")

    @property
    def n(self) -> int:
        return self.graph.rank

    @property
    def rank(self) -> int:
        return self.graph.euler_rank

    @property
    def is_trivial(self) -> bool:
        return self.rank == 0

    def generators(self) -> list[Word]:
        """Free basis read off a BFS spanning tree from the basepoint (or vertex 0)."""
        root = self.graph.basepoint if self.pointed else self.graph.vertices[0]
        assert root is not None
        return loop_generators(self.graph, root)

    def unpointed(self) -> Subgroup:
        if not self.pointed:
            return self
        if self.is_trivial:
            raise TrivialSubgroupError("the trivial subgroup has no conjugacy class core")
        return Subgroup(core(self.graph, pointed=False), pointed=False)

    def based(self, vertex: int | None = None) -> Subgroup:
        """The pointed subgroup π₁(graph, vertex); vertex 0 by default."""
        if self.pointed and vertex is None:
            return self
        v = self.graph.vertices[0] if vertex is None else vertex
        return Subgroup(canonical(self.graph.with_basepoint(v)), pointed=True)

    def __str__(self) -> str:
        body = ", ".join(str(w) for w in self.generators())
        return f"⟨{body}⟩" if self.pointed else f"[{body}]"


@dataclass(frozen=True)
class FactorWitness:
    """Complement words B with H ∗ ⟨B⟩ = F_n, checked by folding."""

    subgroup: Subgroup
    complement: tuple[Word, ...]

    def __str__(self) -> str:
        rest = ", ".join(str(w) for w in self.complement)
        return f"{self.subgroup} ∗ ⟨{rest}⟩"


@dataclass(frozen=True)
class Corank1Certificate:
    """How core_*(H) of a rank n−1 subgroup becomes the rose.

    ``embeds``: the graph is already a sub-rose. ``identified``: folding
    after gluing ``pair`` gives the rose.
    """

    kind: Literal["embeds", "identified"]
    pair: tuple[int, int] | None = None


@dataclass(frozen=True)
class CorankShape:
    """Structure of core_*(A) for a rank n−1 factor.

    ``bounded`` names the least i ≥ 2 whose a_i-runs are bounded;
    ``tree_with_loops`` means a tree with one loop of each a_2..a_n.
    """

    kind: Literal["bounded", "tree_with_loops", "neither"]
    index: int | None = None


@dataclass(frozen=True)
class SeparatingFactor:
    """A rank-2 factor L ⊇ ⟨c⟩ whose intersections with A and its conjugates are trivial."""

    subgroup: Subgroup
    generators: tuple[Word, ...]
    case: Literal["bounded", "tree_with_loops"]
    witness: FactorWitness
    pullback_ranks: tuple[int, ...]
