"""Membership, conjugacy, intersections and free-factor witnesses via folding."""

from __future__ import annotations

from collections.abc import Sequence

from freefactors.core.logging import get_log_context, get_logger
from freefactors.exceptions import (
    EmptyCoreError,
    FactorRankMismatchError,
    LetterOutOfRangeError,
    RankMismatchError,
    RankPreconditionError,
    TrivialSubgroupError,
    UnpointedSubgroupError,
    WordError,
)
from freefactors.graphs import (
    LabeledGraph,
    core,
    core_vertices,
    fold,
    identify,
    iso,
    loop_generators,
    pullback,
    rose,
    single_vertex,
    substitute,
    trace,
    tree_paths,
    wedge,
    wedge_of_loops,
)
from freefactors.subgroups.models import Corank1Certificate, FactorWitness, Mode, Subgroup
from freefactors.words import BasisMap, Word, cyclic_reduce

logger = get_logger(__name__)


def subgroup_from_graph(g: LabeledGraph, pointed: bool = True) -> Subgroup:
    """Fold g and keep the core in the requested mode."""
    folded = fold(g)
    if pointed:
        return Subgroup(core(folded, pointed=True), pointed=True)
    try:
        return Subgroup(core(folded, pointed=False), pointed=False)
    except EmptyCoreError as exc:
        raise TrivialSubgroupError("generators span the trivial subgroup") from exc


def subgroup_of(words: Sequence[Word], n: int, pointed: bool = True) -> Subgroup:
    nontrivial = [w for w in words if not w.is_trivial]
    if not nontrivial:
        raise TrivialSubgroupError("all generators are trivial")
    for w in nontrivial:
        if w.max_index > n:
            raise LetterOutOfRangeError(w.max_index, n)
    return subgroup_from_graph(wedge_of_loops(nontrivial, n), pointed)


def trivial_subgroup(n: int) -> Subgroup:
    return Subgroup(single_vertex(n), pointed=True)


def require_nontrivial(h: Subgroup, operation: str) -> None:
    if h.is_trivial:
        raise TrivialSubgroupError(f"{operation} needs a nontrivial subgroup")


def _require_pointed(h: Subgroup, operation: str) -> int:
    if not h.pointed or h.graph.basepoint is None:
        raise UnpointedSubgroupError(operation)
    return h.graph.basepoint


def _root(h: Subgroup) -> int:
    return h.graph.basepoint if h.graph.basepoint is not None else h.graph.vertices[0]


def contains(h: Subgroup, w: Word) -> bool:
    """Whether w reads a loop at the basepoint of core_*(H).

    Raises:
        UnpointedSubgroupError: if H is unpointed.
        LetterOutOfRangeError: if w uses a letter past a_n.
    """
    base = _require_pointed(h, "contains")
    if w.max_index > h.n:
        raise LetterOutOfRangeError(w.max_index, h.n)
    return trace(h.graph, base, w) == base


def conjugate_into(h: Subgroup, w: Word) -> Word | None:
    """γ with γ⁻¹wγ ∈ H, or None when no conjugate of w lies in H.

    For an unpointed H the answer is relative to the canonical root of core(H).
    """
    if w.is_trivial:
        raise WordError("conjugate_into needs a nontrivial word")
    cyclic, gamma = cyclic_reduce(w)
    labels, _ = tree_paths(h.graph, _root(h))
    for v in h.graph.vertices:
        if trace(h.graph, v, cyclic) == v:
            return gamma * labels[v].inverse()
    return None


def conjugate_subgroup_into(h: Subgroup, k: Subgroup) -> Word | None:
    """g with g⁻¹Hg ≤ K, or None.

    Generators of π₁ at a core vertex r of H are traced as closed loops from
    every vertex of K's graph.
    """
    require_nontrivial(h, "conjugate_subgroup_into")
    if h.n != k.n:
        raise RankMismatchError(h.n, k.n)
    r = core_vertices(h.graph)[0]
    to_core, _ = tree_paths(h.graph, _root(h))
    delta = to_core[r]
    gens = loop_generators(h.graph, r)
    from_base, _ = tree_paths(k.graph, _root(k))
    for v in k.graph.vertices:
        if all(trace(k.graph, v, x) == v for x in gens):
            return delta * from_base[v].inverse()
    return None


def intersect(h1: Subgroup, h2: Subgroup) -> tuple[Subgroup, list[Subgroup]]:
    """H₁ ∩ H₂ and the nontrivial intersections of H₁ with other conjugates of H₂.

    Args:
        h1: Pointed subgroup.
        h2: Pointed subgroup.

    Returns:
        The pointed core of the based pullback component, and the unpointed
        cores of the other nontrivial components.

    Raises:
        UnpointedSubgroupError: if either subgroup is unpointed.
    """
    _require_pointed(h1, "intersect")
    _require_pointed(h2, "intersect")
    components = pullback(h1.graph, h2.graph)
    based = next(c for c in components if c.based)
    others = [
        Subgroup(core(c.graph, pointed=False), pointed=False)
        for c in components
        if not c.based and c.nontrivial
    ]
    return Subgroup(core(based.graph, pointed=True), pointed=True), others


def dist_le2(v1: Subgroup, v2: Subgroup, mode: Mode) -> bool:
    """Whether two factors, the first of rank n−1, lie within distance 2.

    AF: V₁ ∩ V₂ ≠ 1. OF: some conjugate of V₂ meets V₁ nontrivially.

    Args:
        v1: Rank n−1 free factor.
        v2: Free factor of any proper rank.
        mode: AF compares subgroups, OF conjugacy classes.

    Returns:
        Whether the two vertices are within distance 2.

    Raises:
        RankPreconditionError: if rank(V₁) ≠ n−1.
        NotAFactorError: if either input is not a free factor.
    """
    # whitehead imports this module
    from freefactors.subgroups.whitehead import require_factor

    if v1.rank != v1.n - 1:
        raise RankPreconditionError("n-1", v1.rank)
    require_factor(v1, "dist_le2")
    require_factor(v2, "dist_le2")
    if mode is Mode.AF:
        _require_pointed(v1, "AF distance test")
        _require_pointed(v2, "AF distance test")
        return any(c.based and c.nontrivial for c in pullback(v1.graph, v2.graph))
    return any(c.nontrivial for c in pullback(v1.graph, v2.graph))


def apply_automorphism(m: BasisMap, h: Subgroup) -> Subgroup:
    """Image m(H), keeping the pointed/unpointed mode of H."""
    if m.rank != h.n:
        raise RankMismatchError(h.n, m.rank)
    if h.is_trivial:
        return h
    return subgroup_from_graph(substitute(h.graph, m), h.pointed)


def is_basis(words: Sequence[Word], n: int) -> bool:
    if len(words) != n or any(w.is_trivial for w in words):
        return False
    for w in words:
        if w.max_index > n:
            raise LetterOutOfRangeError(w.max_index, n)
    return iso(fold(wedge_of_loops(list(words), n)), rose(n)) is not None


def verify_factor(witness: FactorWitness) -> bool:
    """Fold core_*(H) with the complement lollipops and compare with the rose."""
    h = witness.subgroup
    _require_pointed(h, "verify_factor")
    require_nontrivial(h, "verify_factor")
    if h.rank + len(witness.complement) != h.n:
        raise FactorRankMismatchError(h.rank, len(witness.complement), h.n)
    if any(w.is_trivial for w in witness.complement):
        return False
    graph = wedge(h.graph, wedge_of_loops(list(witness.complement), h.n))
    ok = iso(fold(graph), rose(h.n)) is not None
    if not ok:
        logger.debug(
            "factor witness rejected",
            extra=get_log_context(rank=h.n, operation="verify_factor", subgroup=str(h)),
        )
    return ok


def is_corank1_factor(h: Subgroup) -> Corank1Certificate | None:
    """Decide whether a rank n−1 subgroup is a free factor by a single gluing.

    The certificate is "embeds" when core_*(H) already embeds in the rose
    R_n. R_n has one vertex, so an injective graph map into it exists
    exactly when core_*(H) has one vertex; the n−1 loops then carry
    distinct labels and H is a standard factor up to relabeling. Every
    other factor needs one identification of two vertices, reported as
    "identified" with that pair.

    Returns:
        The certificate, or None when H is not a free factor.
    """
    _require_pointed(h, "is_corank1_factor")
    if h.rank != h.n - 1:
        raise RankPreconditionError("n-1", h.rank)
    g = h.graph
    if g.num_vertices == 1:
        return Corank1Certificate("embeds")
    target = rose(h.n)
    for k, v0 in enumerate(g.vertices):
        for v1 in g.vertices[k + 1 :]:
            if iso(fold(identify(g, v0, v1)), target) is not None:
                return Corank1Certificate("identified", (v0, v1))
    return None
