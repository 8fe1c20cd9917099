"""Rank n−1 factor shapes, separating rank-2 factors and injectivity-radius growth."""

from __future__ import annotations

from typing import Literal

from freefactors.exceptions import (
    RankPreconditionError,
    SubgroupError,
    UnpointedSubgroupError,
    VerificationError,
)
from freefactors.graphs import core, diameter, fold, girth, longest_label_run, pullback, substitute
from freefactors.subgroups.calculus import (
    apply_automorphism,
    contains,
    subgroup_of,
    verify_factor,
)
from freefactors.subgroups.models import CorankShape, FactorWitness, SeparatingFactor, Subgroup
from freefactors.subgroups.whitehead import extend_to_basis
from freefactors.words import Word, f0


def _bounded_index(a: Subgroup) -> tuple[int, int] | None:
    for i in range(2, a.n + 1):
        run = longest_label_run(a.graph, i)
        if run is not None:
            return i, run
    return None


def corank1_shape(a: Subgroup) -> CorankShape:
    if a.rank != a.n - 1:
        raise RankPreconditionError("n-1", a.rank)
    bounded = _bounded_index(a)
    if bounded is not None:
        return CorankShape("bounded", bounded[0])
    g = a.graph
    loops = sorted(e.label for e in g.edges if e.src == e.dst)
    tree_edges = sum(1 for e in g.edges if e.src != e.dst)
    if loops == list(range(2, a.n + 1)) and tree_edges == g.num_vertices - 1:
        return CorankShape("tree_with_loops")
    return CorankShape("neither")


def _check_separation(
    a: Subgroup,
    gens: list[Word],
    complement: list[Word],
    case: Literal["bounded", "tree_with_loops"],
) -> SeparatingFactor:
    n = a.n
    found = subgroup_of(gens, n)
    witness = FactorWitness(found, tuple(complement))
    if not verify_factor(witness):
        raise VerificationError(f"{found} failed its factor check against complement {complement}")
    components = pullback(found.graph, a.graph)
    if any(c.nontrivial for c in components):
        raise VerificationError(f"{found} meets a conjugate of {a} nontrivially")
    return SeparatingFactor(found, tuple(gens), case, witness, tuple(c.rank for c in components))


def separating_factor(
    a: Subgroup, normalized: bool = True, factor: Word | None = None
) -> SeparatingFactor:
    """Rank-2 factor L ⊇ ⟨a_1⟩ meeting every conjugate of A trivially.

    When some a_i (i ≥ 2) has bounded runs of length r in core_*(A),
    L = ⟨a_1, a_i^{r+1} a_1 a_k⟩; otherwise core_*(A) is a tree with
    loops and L = ⟨a_1, a_2 a_1^p a_3⟩ with p past its diameter. With
    ``normalized=False`` the primitive ``factor`` plays the part of a_1.

    Args:
        a: Pointed rank n−1 factor of F_n, n ≥ 3.
        normalized: Whether ⟨a_1⟩ is already the rank-1 factor to separate.
        factor: Primitive word standing in for a_1 when not normalized.

    Returns:
        L with its complement witness, the case taken and the ranks of
        the pullback components of L and A, all zero.

    Raises:
        UnpointedSubgroupError: if A is unpointed.
        RankPreconditionError: if n < 3 or rank(A) ≠ n−1.
        SubgroupError: if a_1 lies in A, or ``factor`` is missing.
        VerificationError: if L fails its factor check or meets a conjugate of A.
    """
    if not a.pointed:
        raise UnpointedSubgroupError("separating_factor")
    n = a.n
    if n < 3:
        raise RankPreconditionError("ambient rank n >= 3", n)
    if a.rank != n - 1:
        raise RankPreconditionError("n-1", a.rank)
    if not normalized:
        if factor is None:
            raise SubgroupError("separating_factor needs the factor word when not normalized")
        phi = extend_to_basis(subgroup_of([factor], n))
        inner = separating_factor(apply_automorphism(phi, a))
        back = phi.inverted()
        gens = [back(w) for w in inner.generators]
        complement = [back(w) for w in inner.witness.complement]
        return _check_separation(a, gens, complement, inner.case)

    a1 = Word((1,))
    if contains(a, a1):
        raise SubgroupError(f"a1 lies in {a}")
    bounded = _bounded_index(a)
    if bounded is not None:
        i, run = bounded
        k = next(j for j in range(2, n + 1) if j != i)
        gens = [a1, Word((i,)) ** (run + 1) * a1 * Word((k,))]
        complement = [Word((i,))] + [Word((j,)) for j in range(2, n + 1) if j not in (i, k)]
        case: Literal["bounded", "tree_with_loops"] = "bounded"
    else:
        p = diameter(a.graph) + 1
        gens = [a1, Word((2,)) * a1**p * Word((3,))]
        complement = [Word((2,))] + [Word((j,)) for j in range(4, n + 1)]
        case = "tree_with_loops"
    return _check_separation(a, gens, complement, case)


def injrad_growth(n: int, a: Subgroup, kmax: int) -> list[int]:
    """Girth of core(f0^k(A)) for k = 0..kmax.

    Args:
        n: Ambient rank.
        a: Subgroup of F_n; its unpointed core is iterated.
        kmax: Number of f0 applications.

    Returns:
        kmax + 1 girths, starting with core(A) itself.
    """
    if a.n != n:
        raise RankPreconditionError(f"subgroup of F_{n}", a.n)
    graph = a.unpointed().graph
    values = [girth(graph)]
    step = f0(n)
    for _ in range(kmax):
        graph = core(fold(substitute(graph, step)), pointed=False)
        values.append(girth(graph))
    return values
