"""Brute-force oracles: word enumeration and products of generators.

Slow and independent of the graph calculus except where noted; the
acceptance suite and the tests compare the fast operations against them.
"""

from __future__ import annotations

import itertools
import random
from collections.abc import Sequence

from freefactors.subgroups import Subgroup, contains, is_basis, subgroup_of
from freefactors.words import Word, enumerate_words, random_word


def random_generators(
    n: int, rng: random.Random, max_words: int = 4, max_length: int = 8
) -> list[Word]:
    """Between one and ``max_words`` nontrivial reduced words."""
    out: list[Word] = []
    for _ in range(rng.randint(1, max_words)):
        w = random_word(n, rng.randint(1, max_length), rng)
        if not w.is_trivial:
            out.append(w)
    return out or [Word((1,))]


def products(gens: Sequence[Word], depth: int) -> set[Word]:
    """All products of at most ``depth`` generators and inverses."""
    letters = list(gens) + [g.inverse() for g in gens]
    seen = {Word()}
    layer = {Word()}
    for _ in range(depth):
        layer = {w * g for w in layer for g in letters} - seen
        seen |= layer
    return seen


def _shorter_move(gens: list[Word]) -> tuple[int, Word] | None:
    for i, j in itertools.permutations(range(len(gens)), 2):
        x, y = gens[i], gens[j]
        for candidate in (x * y, x * y.inverse(), y * x, y.inverse() * x):
            if len(candidate) < len(x):
                return i, candidate
    return None


def nielsen_reduced(gens: Sequence[Word]) -> list[Word]:
    """Apply length-reducing Nielsen moves until none is left, dropping trivial words.

    No move shortens the result, so it satisfies N0 and N1. Completing N2
    needs only length-preserving moves, which never create a trivial word,
    so ``len(result)`` is the rank of the subgroup generated.
    """
    current = [w for w in gens if not w.is_trivial]
    while (move := _shorter_move(current)) is not None:
        i, candidate = move
        current[i] = candidate
        current = [w for w in current if not w.is_trivial]
    return current


def members_up_to(h: Subgroup, length: int) -> set[Word]:
    """Elements of H of length ≤ ``length``.

    Spanning-tree generators each cross one non-tree edge, so a product of
    k of them has length at least k and depth ``length`` suffices.
    """
    return {w for w in products(h.generators(), length) if len(w) <= length}


def membership_disagreements(h: Subgroup, gens: Sequence[Word], depth: int = 4) -> list[Word]:
    """Words where ``contains`` disagrees with enumeration and with products of ``gens``."""
    bad = [p for p in products(gens, depth) if not contains(h, p)]
    listed = members_up_to(h, depth)
    for w in enumerate_words(h.n, depth):
        if contains(h, w) != (w in listed):
            bad.append(w)
    return bad


def intersection_rank(h1: Subgroup, h2: Subgroup, length: int) -> int:
    """Rank of the subgroup generated by common words of length ≤ ``length``."""
    common = [w for w in enumerate_words(h1.n, length) if not w.is_trivial]
    common = [w for w in common if contains(h1, w) and contains(h2, w)]
    if not common:
        return 0
    return subgroup_of(common, h1.n).rank


def has_one_occurrence(u: Word, n: int) -> bool:
    """u = x a_n^{±1} y with x, y free of a_n."""
    return u.count(n) == 1


def complement_search(w: Word, n: int, max_length: int = 2) -> list[Word] | None:
    """Words of length ≤ ``max_length`` completing w to a basis, shortest first."""
    pool = [v for v in enumerate_words(n, max_length) if not v.is_trivial]
    for combo in itertools.combinations(pool, n - 1):
        if is_basis([w, *combo], n):
            return list(combo)
    return None
