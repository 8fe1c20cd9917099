"""Free-factor recognition by Whitehead descent.

Each step applies the first Whitehead automorphism (in a fixed order)
that strictly shrinks the unpointed core. H is a free factor exactly
when the descent ends at a sub-rose, i.e. a core with rank(H) edges.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from freefactors.core.config import settings
from freefactors.core.logging import get_log_context, get_logger
from freefactors.exceptions import (
    NotAFactorError,
    RankPreconditionError,
    UnpointedSubgroupError,
    VerificationError,
)
from freefactors.graphs import LabeledGraph, core, core_size, fold, substitute, tree_paths
from freefactors.subgroups.calculus import (
    apply_automorphism,
    require_nontrivial,
    subgroup_of,
    verify_factor,
)
from freefactors.subgroups.models import FactorWitness, Subgroup
from freefactors.words import BasisMap, Word

logger = get_logger(__name__)


def _multipliers(n: int) -> list[int]:
    return [x for i in range(1, n + 1) for x in (i, -i)]


def _twisted(x: Word, m: Word, choice: int) -> Word:
    if choice == 1:
        return x * m
    if choice == 2:
        return m.inverse() * x
    if choice == 3:
        return m.inverse() * x * m
    return x


@lru_cache(maxsize=16)
def whitehead_automorphisms(n: int) -> tuple[BasisMap, ...]:
    """Type-2 Whitehead automorphisms of F_n, in descent order.

    For a multiplier letter m, every other generator x goes to one of
    x, xm, m⁻¹x, m⁻¹xm. The identity choice is skipped. The inverse uses
    the same choices with m⁻¹.
    """
    autos: list[BasisMap] = []
    for m in _multipliers(n):
        mw = Word((m,))
        others = [i for i in range(1, n + 1) if i != abs(m)]
        for choices in itertools.product(range(4), repeat=n - 1):
            if not any(choices):
                continue
            fwd = [Word((i,)) for i in range(1, n + 1)]
            bwd = list(fwd)
            for i, c in zip(others, choices, strict=True):
                fwd[i - 1] = _twisted(Word((i,)), mw, c)
                bwd[i - 1] = _twisted(Word((i,)), mw.inverse(), c)
            name = f"wh[{m}:{''.join(map(str, choices))}]"
            autos.append(BasisMap(tuple(fwd), name=name).with_inverse(BasisMap(tuple(bwd))))
    return tuple(autos)


@dataclass(frozen=True)
class Descent:
    """Outcome of a descent run: Φ and the unpointed core of Φ(H)."""

    automorphism: BasisMap
    minimal_core: LabeledGraph
    steps: int

    @property
    def size(self) -> int:
        return self.minimal_core.num_edges


def whitehead_descent(h: Subgroup) -> Descent:
    """Shrink the unpointed core of H by Whitehead automorphisms until none helps.

    Args:
        h: Nontrivial subgroup, pointed or not.

    Returns:
        The composed automorphism Φ, the minimal core of Φ(H) and the step count.

    Raises:
        TrivialSubgroupError: if H is trivial.
        VerificationError: if the descent runs past ``whitehead_max_steps``.
    """
    require_nontrivial(h, "whitehead_descent")
    n = h.n
    current = core(fold(h.graph), pointed=False)
    phi = BasisMap.identity(n)
    steps = 0
    while current.num_edges > h.rank:
        size = current.num_edges
        for m in whitehead_automorphisms(n):
            candidate = substitute(current, m)
            if core_size(candidate) < size:
                current = core(fold(candidate), pointed=False)
                phi = m.compose(phi)
                steps += 1
                logger.debug(
                    "whitehead step",
                    extra=get_log_context(
                        rank=n, operation="whitehead_descent", step=steps, size=current.num_edges
                    ),
                )
                break
        else:
            break
        if steps > settings.whitehead_max_steps:
            limit = settings.whitehead_max_steps
            raise VerificationError(f"whitehead descent exceeded {limit} steps")
    return Descent(phi, current, steps)


def _check_factor_rank(h: Subgroup, operation: str) -> None:
    if not h.pointed:
        raise UnpointedSubgroupError(operation)
    require_nontrivial(h, operation)
    if not 1 <= h.rank <= h.n - 1:
        raise RankPreconditionError(f"1..{h.n - 1}", h.rank)


def standard_factor(n: int, k: int) -> Subgroup:
    """⟨a_1, …, a_k⟩ as a pointed subgroup."""
    return subgroup_of([Word((i,)) for i in range(1, k + 1)], n)


def _normalizing_map(h: Subgroup) -> BasisMap | None:
    descent = whitehead_descent(h)
    if descent.size != h.rank:
        return None
    n, k = h.n, h.rank
    image = apply_automorphism(descent.automorphism, h)
    g = image.graph
    hub = next(e.src for e in g.edges if e.src == e.dst)
    assert g.basepoint is not None
    stalk = tree_paths(g, g.basepoint)[0][hub]
    loops = sorted(e.label for e in g.edges if e.src == e.dst)
    rest = [i for i in range(1, n + 1) if i not in loops]
    perm = [0] * n
    for position, label in enumerate(loops + rest, start=1):
        perm[label - 1] = position
    phi = (
        BasisMap.signed_permutation(n, perm)
        .compose(BasisMap.inner(n, stalk))
        .compose(descent.automorphism)
    )
    if apply_automorphism(phi, h) != standard_factor(n, k):
        raise VerificationError(f"normalizing map does not carry {h} to the standard factor")
    return phi


def extend_to_basis(h: Subgroup) -> BasisMap:
    """Automorphism φ with φ(H) = ⟨a_1, …, a_rank(H)⟩ as pointed subgroups.

    Args:
        h: Pointed subgroup of rank 1..n−1.

    Returns:
        The normalizing automorphism, with its inverse attached.

    Raises:
        NotAFactorError: if H is not a free factor.
        RankPreconditionError: if rank(H) is 0 or n.
    """
    _check_factor_rank(h, "extend_to_basis")
    phi = _normalizing_map(h)
    if phi is None:
        raise NotAFactorError(f"{h} is not a free factor")
    return phi


def is_free_factor(h: Subgroup) -> FactorWitness | None:
    """A verified complement for H, or None when H is not a free factor.

    The complement is φ⁻¹(a_{k+1}), …, φ⁻¹(a_n) for the normalizing map φ.
    """
    _check_factor_rank(h, "is_free_factor")
    phi = _normalizing_map(h)
    if phi is None:
        return None
    back = phi.inverted()
    complement = tuple(back(Word((j,))) for j in range(h.rank + 1, h.n + 1))
    witness = FactorWitness(h, complement)
    if not verify_factor(witness):
        raise VerificationError(f"complement {complement} for {h} does not fold to the rose")
    return witness


def require_factor(h: Subgroup, operation: str) -> FactorWitness:
    """Witness that H (or, when unpointed, its based representative) is a free factor.

    Raises:
        NotAFactorError: if Whitehead descent finds no complement.
    """
    base = h if h.pointed else h.based()
    witness = is_free_factor(base)
    if witness is None:
        raise NotAFactorError(f"{h} is not a free factor ({operation})")
    return witness
