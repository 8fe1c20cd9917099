"""Vertices, apartments and the stick structures attached to them."""

from __future__ import annotations

from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field
from enum import Enum

from freefactors.exceptions import (
    FaceError,
    NonStandardApartmentError,
    NotAFactorError,
    RankPreconditionError,
)
from freefactors.graphs import LabeledGraph
from freefactors.subgroups import (
    FactorWitness,
    Mode,
    Subgroup,
    is_free_factor,
    subgroup_of,
    verify_factor,
)
from freefactors.words import Word


class Verdict(str, Enum):
    STANDARD = "standard"
    FAKE = "fake"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True, eq=False)
class FactorVertex:
    """A proper free factor (AF) or its conjugacy class (OF), with a witness.

    Equality is pointed isomorphism of core graphs in AF mode and
    unpointed isomorphism in OF mode.
    """

    subgroup: Subgroup
    mode: Mode
    witness: FactorWitness
    generators: tuple[Word, ...]

    @classmethod
    def from_words(
        cls,
        words: Sequence[Word],
        n: int,
        mode: Mode,
        complement: Sequence[Word] | None = None,
    ) -> FactorVertex:
        pointed = subgroup_of(list(words), n)
        if not 1 <= pointed.rank <= n - 1:
            raise RankPreconditionError(f"1..{n - 1}", pointed.rank)
        if complement is None:
            witness = is_free_factor(pointed)
            if witness is None:
                raise NotAFactorError(f"{pointed} is not a free factor")
        else:
            witness = FactorWitness(pointed, tuple(complement))
            if not verify_factor(witness):
                raise NotAFactorError(f"complement {witness} does not fold to the rose")
        subgroup = pointed if mode is Mode.AF else pointed.unpointed()
        return cls(subgroup, mode, witness, tuple(words))

    @property
    def key(self) -> tuple[Mode, LabeledGraph]:
        return (self.mode, self.subgroup.graph)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FactorVertex):
            return NotImplemented
        return self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    @property
    def n(self) -> int:
        return self.subgroup.n

    @property
    def rank(self) -> int:
        return self.subgroup.rank

    @property
    def pointed(self) -> Subgroup:
        """A pointed representative: the subgroup itself in AF mode."""
        return self.witness.subgroup

    @property
    def label(self) -> str:
        body = ", ".join(str(w) for w in self.generators)
        return f"⟨{body}⟩" if self.mode is Mode.AF else f"[{body}]"

    def __str__(self) -> str:
        return self.label


def proper_subsets(n: int) -> list[frozenset[int]]:
    """Nonempty proper subsets of 1..n ordered by size, then lexicographically."""
    out: list[frozenset[int]] = []
    for mask in range(1, (1 << n) - 1):
        out.append(frozenset(i + 1 for i in range(n) if mask >> i & 1))
    return sorted(out, key=lambda s: (len(s), sorted(s)))


@dataclass(frozen=True, eq=False)
class Apartment:
    """Extensional apartment: a factor vertex for every nonempty proper subset."""

    n: int
    mode: Mode
    assignment: Mapping[frozenset[int], FactorVertex]
    basis: tuple[Word, ...] | None = None

    def vertex(self, *indices: int) -> FactorVertex:
        key = frozenset(indices)
        if key not in self.assignment:
            raise FaceError(f"no vertex for index set {sorted(key)}")
        return self.assignment[key]

    def opposite(self, i: int) -> FactorVertex:
        """Barycentre of the codimension-1 face missing index i."""
        return self.vertex(*(j for j in range(1, self.n + 1) if j != i))

    def rank_one(self) -> list[FactorVertex]:
        return [self.vertex(i) for i in range(1, self.n + 1)]

    def vertices(self) -> list[FactorVertex]:
        return [self.assignment[s] for s in proper_subsets(self.n) if s in self.assignment]

    def require_basis(self) -> tuple[Word, ...]:
        if self.basis is None:
            raise NonStandardApartmentError()
        return self.basis

    def check_indices(self, *indices: int) -> None:
        if len(set(indices)) != len(indices):
            raise FaceError(f"face indices must be distinct: {indices}")
        for i in indices:
            if not 1 <= i <= self.n:
                raise FaceError(f"face index {i} outside 1..{self.n}")


def realize(basis: Sequence[Word], pattern: Sequence[int]) -> Word:
    """Product of b_|p|^sign(p) over a signed index pattern."""
    out = Word()
    for p in pattern:
        b = basis[abs(p) - 1]
        out = out * (b if p > 0 else b.inverse())
    return out


@dataclass(frozen=True)
class Stick:
    """Rank-1 factor ⟨b_i^ε b_j^δ⟩ at the face {i, j}."""

    face: tuple[int, int]
    pattern: tuple[int, ...]
    word: Word
    vertex: FactorVertex = field(compare=False)

    @property
    def key(self) -> tuple[Mode, LabeledGraph]:
        return self.vertex.key

    def __str__(self) -> str:
        return self.vertex.label


@dataclass(frozen=True)
class Superstick:
    """Rank-1 factor ⟨b_p^δ₁ b_q^δ₂ b_r^δ₃⟩ at a rank-3 face."""

    face: tuple[int, int, int]
    pattern: tuple[int, ...]
    word: Word
    vertex: FactorVertex = field(compare=False)

    @property
    def key(self) -> tuple[Mode, LabeledGraph]:
        return self.vertex.key

    def __str__(self) -> str:
        return self.vertex.label


@dataclass(frozen=True)
class Snop:
    """One stick per rank-2 face, keyed by face, bonded on every rank-3 face."""

    sticks: tuple[Stick, ...]

    def differences(self, other: Snop) -> int:
        return sum(1 for a, b in zip(self.sticks, other.sticks, strict=True) if a.key != b.key)


@dataclass(frozen=True)
class SnopCube:
    snops: tuple[Snop, ...]
    edges: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class LoopSearch:
    """Outcome of a bounded loop search.

    ``exhaustive`` means nothing was cut off by the length bound or the
    candidate budget, so an absent witness is a proof of absence.
    """

    witness: Word | None
    exhaustive: bool
    examined: int
