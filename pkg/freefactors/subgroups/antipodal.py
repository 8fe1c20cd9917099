"""Antipodality of a rank n−1 factor and a rank-1 factor.

AF: A ∗ ⟨u⟩ = F_n. OF: A ∗ ⟨γuγ⁻¹⟩ = F_n for some γ.

Callers holding vertices whose factor witness was already checked pass
``verify=False`` to skip the Whitehead descent.
"""

from __future__ import annotations

from freefactors.exceptions import RankPreconditionError, WordError
from freefactors.graphs import fold, iso, loop_graph, rose, wedge
from freefactors.subgroups.models import Subgroup
from freefactors.subgroups.whitehead import extend_to_basis, require_factor
from freefactors.words import Word, cyclic_reduce


def _check(a: Subgroup, u: Word) -> None:
    if a.rank != a.n - 1:
        raise RankPreconditionError("n-1", a.rank)
    if u.is_trivial:
        raise WordError("antipodality needs a nontrivial word")


def antipodal_af(a: Subgroup, u: Word, verify: bool = True) -> bool:
    """Fold core_*(A) ∨ lollipop(u) and compare with the rose.

    Args:
        a: Pointed rank n−1 subgroup.
        u: Nontrivial word.
        verify: Establish that A is a free factor first.

    Returns:
        Whether A ∗ ⟨u⟩ = F_n.

    Raises:
        RankPreconditionError: if rank(A) ≠ n−1.
        NotAFactorError: if ``verify`` is set and A is not a free factor.
    """
    _check(a, u)
    if verify:
        require_factor(a, "antipodal_af")
    base = a.based()
    return iso(fold(wedge(base.graph, loop_graph(u, a.n))), rose(a.n)) is not None


def antipodal_of(a: Subgroup, u: Word) -> bool:
    """Normalize A to ⟨a_1..a_{n−1}⟩; then [A] ⊥ [u] iff a_n occurs once cyclically.

    The normalization raises NotAFactorError for a non-factor.
    """
    _check(a, u)
    phi = extend_to_basis(a.based())
    cyclic, _ = cyclic_reduce(phi(u))
    return cyclic.count(a.n) == 1


def antipodal_of_fold(a: Subgroup, u: Word, verify: bool = True) -> bool:
    """Graph-native OF antipodality.

    Tries a loop reading each rotation of the cyclic core of u at each
    vertex of core(A); [A] ⊥ [u] iff one of them folds to the rose.
    ``verify`` works as in antipodal_af.
    """
    _check(a, u)
    if verify:
        require_factor(a, "antipodal_of")
    graph = a.unpointed().graph
    cyclic, _ = cyclic_reduce(u)
    target = rose(a.n)
    loops = [loop_graph(r, a.n) for r in dict.fromkeys(cyclic.rotations())]
    for v in graph.vertices:
        at_v = graph.with_basepoint(v)
        for loop in loops:
            folded = fold(wedge(at_v, loop))
            if folded.num_vertices == 1 and iso(folded, target) is not None:
                return True
    return False
