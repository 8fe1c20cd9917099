"""Explicit fake apartments: the bridge family in every rank and the rank-3 twist."""

from __future__ import annotations

from dataclasses import dataclass

from freefactors.complex.apartments import (
    antipodal_faces_check,
    apartment_from_assignment,
    is_standard_af,
    verify_apartment,
)
from freefactors.complex.models import Apartment, FactorVertex, Verdict, proper_subsets
from freefactors.complex.recognition import barycentre_generation_check, of3_report
from freefactors.core.logging import get_log_context, get_logger
from freefactors.exceptions import ComplexError, NotAFactorError
from freefactors.reports import Report
from freefactors.subgroups import (
    Mode,
    Subgroup,
    antipodal_af,
    antipodal_of_fold,
    contains,
    subgroup_of,
)
from freefactors.words import Alphabet, Word, build_W

logger = get_logger(__name__)


@dataclass(frozen=True)
class FakeFamily:
    h: Subgroup
    af: Apartment
    of: Apartment
    report: Report

    @property
    def verdict(self) -> Verdict:
        return Verdict.FAKE if self.report.passed else Verdict.INCONCLUSIVE


def bridge_generators(n: int) -> list[Word]:
    """a_1, …, a_{n−1} and W_{n−1} a_n W_{n−1}⁻¹; index n is the bridge word."""
    if n < 3:
        raise ComplexError(f"the bridge family needs n >= 3, got {n}")
    w = build_W(n, n - 1)
    return [Word((i,)) for i in range(1, n)] + [w * Word((n,)) * w.inverse()]


def bridge_complement(n: int, subset: frozenset[int]) -> list[Word]:
    """Words completing the subgroup on ``subset`` to a basis of F_n.

    Without the bridge word the missing a_i and a_n do. With it, take the
    least missing index j ≤ n−1 and use the other missing a_i together
    with W_{j−1} a_j W_{j−1}⁻¹.
    """
    if n not in subset:
        return [Word((i,)) for i in range(1, n) if i not in subset] + [Word((n,))]
    j = min(i for i in range(1, n) if i not in subset)
    w = build_W(n, j - 1)
    rest = [Word((i,)) for i in range(1, n) if i not in subset and i != j]
    return rest + [w * Word((j,)) * w.inverse()]


def _bridge_apartment(n: int, mode: Mode, report: Report) -> Apartment:
    gens = bridge_generators(n)
    assignment: dict[frozenset[int], FactorVertex] = {}
    failures = []
    for subset in proper_subsets(n):
        words = [gens[i - 1] for i in sorted(subset)]
        try:
            assignment[subset] = FactorVertex.from_words(
                words, n, mode, complement=bridge_complement(n, subset)
            )
        except NotAFactorError as exc:
            failures.append(f"{sorted(subset)}: {exc}")
    report.add(
        f"({mode.value}) proper subsets generate free factors",
        not failures,
        f"{len(assignment)} factors verified by folding",
        failures,
    )
    if failures:
        raise NotAFactorError("; ".join(failures))
    ap = Apartment(n, mode, assignment)
    report.extend(verify_apartment(ap), prefix=f"({mode.value}) ")
    return ap


def fake_family(n: int) -> FakeFamily:
    """The bridge family in rank n, with its AF and OF apartments and checks.

    Codimension-1 faces are standard and opposite faces antipodal, yet
    meeting barycentres only generate H ≠ F_n.
    """
    gens = bridge_generators(n)
    report = Report(title=f"bridge family (n={n})")
    h = subgroup_of(gens, n)
    af = _bridge_apartment(n, Mode.AF, report)
    of = _bridge_apartment(n, Mode.OF, report)

    for i in range(1, n + 1):
        face = af.opposite(i)
        words = [af.vertex(j).subgroup.generators()[0] for j in range(1, n + 1) if j != i]
        report.add(
            f"face {face.label} spanned by its rank-1 vertices",
            subgroup_of(words, n) == face.subgroup,
        )

    for j in range(1, n):
        w = build_W(n, j - 1)
        u = w * Word((j,)) * w.inverse()
        report.add(
            f"V_{j} ⊥ ⟨{u}⟩",
            antipodal_af(af.opposite(j).subgroup, u, verify=False),
        )
    report.add(f"a_{n} ∉ H", not contains(h, Word((n,))), f"H = {h}")
    report.extend(antipodal_faces_check(of), prefix="opposite ")
    report.add("rank-1 vertices are not a basis", not is_standard_af(af))
    generation = barycentre_generation_check(of)
    report.add(
        "meeting barycentres fail to generate F_n",
        not generation.passed,
        witnesses=[c.name for c in generation.failed],
    )
    logger.info(
        "bridge family checked",
        extra=get_log_context(rank=n, operation="fake_family", passed=report.passed),
    )
    return FakeFamily(h, af, of, report)


def twisted_apartment(gamma: Word | None = None) -> Apartment:
    """Δ(a,b,c) in OF_3 with [a, b] replaced by [a, γbγ⁻¹]; γ defaults to baca⁻¹."""
    alphabet = Alphabet(3)
    a, b, c = alphabet.generators()
    if gamma is None:
        gamma = alphabet.parse("bacA")
    twisted = gamma * b * gamma.inverse()
    generators = {
        frozenset((1,)): [a],
        frozenset((2,)): [b],
        frozenset((3,)): [c],
        frozenset((1, 2)): [a, twisted],
        frozenset((1, 3)): [a, c],
        frozenset((2, 3)): [b, c],
    }
    return apartment_from_assignment(3, Mode.OF, generators)


def twisted_apartment_report(gamma: Word | None = None, bound: int | None = None) -> Report:
    ap = twisted_apartment(gamma)
    twisted = ap.vertex(1, 2)
    c = ap.vertex(3).subgroup.generators()[0]
    report = Report(title=f"twisted apartment {twisted.label}")
    report.add(f"{twisted.label} ⊥ [{c}]", antipodal_of_fold(twisted.subgroup, c, verify=False))
    report.extend(of3_report(ap, bound))
    return report

