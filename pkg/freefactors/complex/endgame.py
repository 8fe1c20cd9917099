"""Overlap of Nielsen-adjacent apartments, midpoints and one-off apartments."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum

from freefactors.complex.models import Apartment, FactorVertex, Superstick, realize
from freefactors.complex.sticks import all_sticks, carried, sticks_of, supersticks
from freefactors.core.logging import get_log_context, get_logger
from freefactors.exceptions import ApartmentPreconditionError, FaceError, ModeError
from freefactors.reports import Report
from freefactors.subgroups import Mode
from freefactors.words import Word

logger = get_logger(__name__)


class Overlap(str, Enum):
    VERTEX = "vertex"
    STICK = "stick"
    SUPERSTICK = "superstick"
    NONE = "none"


@dataclass(frozen=True)
class Midpoint:
    """A rank-2 vertex [b_j b_k, b_i] and the supersticks of its face it carries."""

    vertex: FactorVertex
    supersticks: tuple[Superstick, ...]


def _classifier(d0: Apartment) -> dict[object, Overlap]:
    table: dict[object, Overlap] = {}
    for face3 in itertools.combinations(range(1, d0.n + 1), 3):
        for s in supersticks(d0, face3):
            table[s.key] = Overlap.SUPERSTICK
    for stick in all_sticks(d0):
        table[stick.key] = Overlap.STICK
    for v in d0.rank_one():
        table[v.key] = Overlap.VERTEX
    return table


def classify(d0: Apartment, c: FactorVertex) -> Overlap:
    """Whether a rank-1 vertex is a vertex, stick or superstick of ``d0``."""
    if c.mode is not d0.mode:
        raise ModeError(d0.mode.value, c.mode.value)
    d0.require_basis()
    return _classifier(d0).get(c.key, Overlap.NONE)


def nielsen_pair(d0: Apartment, d1: Apartment) -> tuple[int, int] | None:
    """(i, j) when d1's basis is d0's with b_i replaced by b_i b_j^±1."""
    b0, b1 = d0.require_basis(), d1.require_basis()
    if len(b0) != len(b1):
        return None
    changed = [i for i in range(len(b0)) if b0[i] != b1[i]]
    if len(changed) != 1:
        return None
    i = changed[0]
    for j in range(len(b0)):
        if j != i and b1[i] in (b0[i] * b0[j], b0[i] * b0[j].inverse()):
            return i + 1, j + 1
    return None


def overlap_report(d0: Apartment, d1: Apartment) -> Report:
    """Classify the rank-1 vertices and sticks of d1 against d0.

    Rank-1 vertices of d1 must be vertices or sticks of d0. Sticks of d1
    must be vertices, sticks or supersticks of d0, except for sticks at the
    face of d1 spanned by b_i b_j and b_j when d1 is the Nielsen move
    (i, j) of d0; those exceptions are exactly the face's sticks that are
    not rank-1 vertices of d0.
    """
    if d0.mode is not d1.mode:
        raise ModeError(d0.mode.value, d1.mode.value)
    if d0.n != d1.n:
        raise ApartmentPreconditionError(f"apartments of different rank: {d0.n} and {d1.n}")
    table = _classifier(d0)
    pair = nielsen_pair(d0, d1)
    report = Report(title=f"overlap of apartments (n={d0.n}, mode={d0.mode.value})")

    for v in d1.rank_one():
        kind = table.get(v.key, Overlap.NONE)
        report.add(
            f"rank-1 vertex {v.label}",
            kind in (Overlap.VERTEX, Overlap.STICK),
            kind.value,
        )

    at_face = set()
    if pair is not None:
        at_face = {s.key for s in sticks_of(d1, *pair)}
    exceptions = []
    for stick in all_sticks(d1):
        kind = table.get(stick.key, Overlap.NONE)
        if kind is Overlap.NONE:
            exceptions.append(stick)
        report.add(
            f"stick {stick} at {stick.face}",
            kind is not Overlap.NONE or stick.key in at_face,
            kind.value,
        )

    if pair is None:
        report.add("no unclassified sticks", not exceptions, witnesses=exceptions)
    else:
        expected = {
            s.key for s in sticks_of(d1, *pair) if table.get(s.key) is not Overlap.VERTEX
        }
        report.add(
            f"exceptions are the sticks at face {pair}",
            {s.key for s in exceptions} == expected,
            f"{len(exceptions)} exceptions, {len(expected)} expected",
            exceptions,
        )
    logger.debug(
        "overlap classified",
        extra=get_log_context(
            rank=d0.n, mode=d0.mode.value, operation="overlap_report", exceptions=len(exceptions)
        ),
    )
    return report


def _require_standard_of(ap: Apartment) -> tuple[Word, ...]:
    if ap.mode is not Mode.OF:
        raise ModeError(Mode.OF.value, ap.mode.value)
    return ap.require_basis()


def midpoints(ap: Apartment, i: int, pair: tuple[int, int]) -> list[Midpoint]:
    """[b_j b_k, b_i] and [b_k b_j, b_i] with the supersticks each carries."""
    basis = _require_standard_of(ap)
    if ap.n < 3:
        raise ApartmentPreconditionError("midpoints need n >= 3")
    j, k = pair
    ap.check_indices(i, j, k)
    face3 = tuple(sorted((i, j, k)))
    listed = supersticks(ap, face3)
    rest = [basis[x - 1] for x in range(1, ap.n + 1) if x not in face3]
    out = []
    for p, q in ((j, k), (k, j)):
        vertex = FactorVertex.from_words(
            [realize(basis, (p, q)), basis[i - 1]],
            ap.n,
            Mode.OF,
            complement=[basis[q - 1], *rest],
        )
        out.append(Midpoint(vertex, tuple(carried(vertex, listed))))
    return out


def one_off_check(d0: Apartment, d1: Apartment) -> int | None:
    """k with d1's vertex opposite [b_1] equal to [b_2^{b_1^k}, b_3], else None.

    d1 must agree with the standard apartment d0 at every other vertex.
    """
    basis = _require_standard_of(d0)
    if d1.mode is not Mode.OF:
        raise ModeError(Mode.OF.value, d1.mode.value)
    if d0.n != 3 or d1.n != 3:
        raise ApartmentPreconditionError("one-off apartments are defined for n = 3")
    target = frozenset((2, 3))
    for subset, vertex in d0.assignment.items():
        if subset == target:
            continue
        try:
            other = d1.vertex(*subset)
        except FaceError as exc:
            raise ApartmentPreconditionError(str(exc)) from exc
        if other.key != vertex.key:
            raise ApartmentPreconditionError(
                f"apartments differ at {sorted(subset)}: {vertex.label} and {other.label}"
            )
    v = d1.vertex(2, 3)
    b1, b2, b3 = basis
    bound = len(v.subgroup.graph.edges)
    for k in sorted(range(-bound, bound + 1), key=lambda x: (abs(x), x < 0)):
        g = b1**k
        words = [g.inverse() * b2 * g, b3]
        candidate = FactorVertex.from_words(words, 3, Mode.OF, complement=[b1])
        if candidate.key == v.key:
            return k
    logger.debug(
        "one-off vertex is not a power conjugate",
        extra=get_log_context(rank=3, mode="of", operation="one_off_check", vertex=v.label),
    )
    return None
