"""Recognising standard apartments of OF_n.

Rank 3 uses antipodal opposite vertices plus a potential stick at every
rank-2 vertex. Higher ranks use the build-up conditions, recursing into
codimension-1 faces through the link restriction.
"""

from __future__ import annotations

import itertools
import time
from collections.abc import Sequence

from freefactors.complex.apartments import (
    antipodal_faces_check,
    apartment_from_assignment,
    verify_apartment,
)
from freefactors.complex.models import Apartment, FactorVertex, LoopSearch, Verdict
from freefactors.core.config import settings
from freefactors.core.logging import get_log_context, get_logger
from freefactors.exceptions import ApartmentPreconditionError, ModeError
from freefactors.graphs import fold, iso, pullback, rose, wedge
from freefactors.reports import Report
from freefactors.subgroups import (
    Mode,
    antipodal_of_fold,
    apply_automorphism,
    conjugate_subgroup_into,
    extend_to_basis,
    subgroup_of,
)
from freefactors.words import Word

logger = get_logger(__name__)


def verdict_of(report: Report) -> Verdict:
    if report.failed:
        return Verdict.FAKE
    if report.inconclusive:
        return Verdict.INCONCLUSIVE
    return Verdict.STANDARD


def _status_passed(verdict: Verdict) -> bool | None:
    if verdict is Verdict.INCONCLUSIVE:
        return None
    return verdict is Verdict.STANDARD


def _is_potential_stick(u: Word, v: FactorVertex, others: Sequence[FactorVertex]) -> bool:
    cls = subgroup_of([u], v.n).unpointed()
    if conjugate_subgroup_into(cls, v.subgroup) is None:
        return False
    return all(antipodal_of_fold(o.subgroup, u, verify=False) for o in others)


def potential_stick_search(
    v: FactorVertex,
    others: Sequence[FactorVertex],
    bound: int | None = None,
    candidates: Sequence[Word] = (),
    max_candidates: int | None = None,
) -> LoopSearch:
    """A rank-1 class in V antipodal to every vertex of ``others``.

    ``candidates`` are tried first. The search then normalizes the first
    of ``others`` to ⟨a_1..a_{n−1}⟩ and walks loops of core(φ(V)) that
    cross exactly one a_n-edge, shortest first.

    Args:
        v: OF vertex to search in.
        others: Vertices the witness must be antipodal to; the first is the
            rank n−1 factor used for normalization.
        bound: Loop length limit, ``loop_search_bound`` by default.
        candidates: Words tried before the loop walk.
        max_candidates: Candidate budget, ``loop_search_max_candidates`` by default.

    Returns:
        The witness, if any, with whether the search was exhaustive.

    Raises:
        ModeError: if V is not an OF vertex.
        ApartmentPreconditionError: if ``others`` is empty.
    """
    if v.mode is not Mode.OF:
        raise ModeError(Mode.OF.value, v.mode.value)
    if not others:
        raise ApartmentPreconditionError("potential stick search needs at least one other vertex")
    bound = settings.loop_search_bound if bound is None else bound
    budget = settings.loop_search_max_candidates if max_candidates is None else max_candidates
    n = v.n
    examined = 0
    for u in candidates:
        examined += 1
        if _is_potential_stick(u, v, others):
            return LoopSearch(u, exhaustive=True, examined=examined)

    phi = extend_to_basis(others[0].pointed)
    back = phi.inverted()
    graph = apply_automorphism(phi, v.subgroup).graph
    rest = others[1:]

    layer = [(e.dst, n, (n,), e.src) for e in graph.edges if e.label == n]
    truncated = False
    processed = 0
    while layer:
        nxt = []
        for vertex, last, letters, target in layer:
            processed += 1
            if vertex == target:
                examined += 1
                u = back(Word(letters))
                if all(antipodal_of_fold(o.subgroup, u, verify=False) for o in rest):
                    return LoopSearch(u, exhaustive=True, examined=examined)
            if len(letters) >= bound:
                if any(
                    abs(s.letter) != n and s.letter != -last for s in graph.incidence[vertex]
                ):
                    truncated = True
                continue
            for step in graph.incidence[vertex]:
                if abs(step.letter) == n or step.letter == -last:
                    continue
                nxt.append((step.target, step.letter, letters + (step.letter,), target))
        if processed + len(nxt) > budget:
            truncated = True
            break
        layer = nxt
    logger.debug(
        "potential stick search exhausted",
        extra=get_log_context(
            rank=n,
            mode="of",
            operation="potential_stick_search",
            examined=examined,
            truncated=truncated,
        ),
    )
    return LoopSearch(None, exhaustive=not truncated, examined=examined)


def _require_of(ap: Apartment, n: int | None = None) -> None:
    if ap.mode is not Mode.OF:
        raise ModeError(Mode.OF.value, ap.mode.value)
    if n is not None and ap.n != n:
        raise ApartmentPreconditionError(f"operation needs n = {n}, got {ap.n}")


def _search_check(report: Report, name: str, search: LoopSearch, bound: int) -> None:
    if search.witness is not None:
        report.add(name, True, f"witness after {search.examined} loops", [search.witness])
    elif search.exhaustive:
        report.add(name, False, f"no candidate among {search.examined} loops (exhaustive)")
    else:
        report.add(name, None, f"none up to length {bound} ({search.examined} loops)")


def _face_candidates(ap: Apartment, face: Sequence[int]) -> list[Word]:
    """Products of the rank-1 generators of a face, in order and with one inverse."""
    gens = [ap.vertex(i).subgroup.generators()[0] for i in face]
    out = []
    product = Word()
    for g in gens:
        product = product * g
    out.append(product)
    if len(gens) >= 2:
        tail = Word()
        for g in gens[1:]:
            tail = tail * g
        out.append(gens[0].inverse() * tail)
    return out


def of3_report(ap: Apartment, search_bound: int | None = None) -> Report:
    """Opposite vertices antipodal, and a potential stick at each rank-2 vertex."""
    _require_of(ap, 3)
    if not verify_apartment(ap).passed:
        raise ApartmentPreconditionError("apartment fails its invariants")
    bound = settings.loop_search_bound if search_bound is None else search_bound
    report = Report(title="OF_3 standardness")
    report.extend(antipodal_faces_check(ap), prefix="opposite ")
    for i, j in itertools.combinations(range(1, 4), 2):
        v = ap.vertex(i, j)
        k = 6 - i - j
        others = [ap.vertex(i, k), ap.vertex(j, k)]
        search = potential_stick_search(v, others, bound, _face_candidates(ap, (i, j)))
        _search_check(report, f"potential stick at {v.label}", search, bound)
    return report


def of3_standardness(ap: Apartment, search_bound: int | None = None) -> Verdict:
    return verdict_of(of3_report(ap, search_bound))


def restrict_to_face(ap: Apartment, face: Sequence[int]) -> Apartment:
    """The face Δ[T] as an apartment of OF_|T| inside its barycentre."""
    _require_of(ap)
    ap.check_indices(*face)
    t = sorted(face)
    k = len(t)
    if not 2 <= k <= ap.n - 1:
        raise ApartmentPreconditionError(f"face size must lie in 2..{ap.n - 1}, got {k}")
    top = ap.vertex(*t).pointed
    phi = extend_to_basis(top)
    reindex = {old: new for new, old in enumerate(t, start=1)}
    generators: dict[frozenset[int], list[Word]] = {}
    for size in range(1, k):
        for sub in itertools.combinations(t, size):
            vertex = ap.vertex(*sub)
            g = conjugate_subgroup_into(vertex.subgroup, top)
            if g is None:
                raise ApartmentPreconditionError(f"{vertex.label} is not adjacent to {top}")
            words = [phi(x.conjugate(g.inverse())) for x in vertex.subgroup.generators()]
            generators[frozenset(reindex[s] for s in sub)] = words
    return apartment_from_assignment(k, Mode.OF, generators)


def _rank2_standard(face: Apartment) -> bool:
    x = face.vertex(1)
    y = face.vertex(2).subgroup.generators()[0]
    return antipodal_of_fold(x.subgroup, y, verify=False)


def face_verdict(ap: Apartment, search_bound: int | None = None) -> Verdict:
    """Standardness of an OF apartment of any rank n ≥ 2."""
    if ap.n == 2:
        return Verdict.STANDARD if _rank2_standard(ap) else Verdict.FAKE
    if ap.n == 3:
        return of3_standardness(ap, search_bound)
    return verdict_of(buildup_conditions(ap, search_bound))


def barycentre_generation_check(ap: Apartment) -> Report:
    """Representatives of codimension-1 barycentres that meet must generate F_n."""
    report = Report(title="barycentre generation")
    target = rose(ap.n)
    for i, j in itertools.combinations(range(1, ap.n + 1), 2):
        a, b = ap.opposite(i), ap.opposite(j)
        failures = []
        for component in pullback(a.subgroup.graph, b.subgroup.graph):
            if not component.nontrivial:
                continue
            u, w = component.pairs[0]
            left = a.subgroup.graph.with_basepoint(u)
            joined = fold(wedge(left, b.subgroup.graph.with_basepoint(w)))
            if iso(joined, target) is None:
                failures.append(f"rank-{component.rank} meeting at ({u}, {w})")
        report.add(f"{a.label} ∨ {b.label} spans F_{ap.n}", not failures, witnesses=failures)
    return report


def buildup_conditions(ap: Apartment, search_bound: int | None = None) -> Report:
    """The build-up conditions plus barycentre generation."""
    _require_of(ap)
    if ap.n < 3:
        raise ApartmentPreconditionError(f"build-up conditions need n >= 3, got {ap.n}")
    bound = settings.loop_search_bound if search_bound is None else search_bound
    started = time.perf_counter()
    report = Report(title=f"build-up conditions (n={ap.n})")

    for i in range(1, ap.n + 1):
        face = [j for j in range(1, ap.n + 1) if j != i]
        verdict = face_verdict(restrict_to_face(ap, face), bound)
        report.add(
            f"(1) face opposite {ap.vertex(i).label} standard",
            _status_passed(verdict),
            verdict.value,
        )

    report.extend(antipodal_faces_check(ap), prefix="(2) ")

    for i in range(1, ap.n + 1):
        v = ap.opposite(i)
        others = [ap.opposite(j) for j in range(1, ap.n + 1) if j != i]
        face = [j for j in range(1, ap.n + 1) if j != i]
        search = potential_stick_search(v, others, bound, _face_candidates(ap, face))
        _search_check(report, f"(3) rank-1 class adjacent to {v.label}", search, bound)

    report.extend(barycentre_generation_check(ap), prefix="(4) ")
    logger.info(
        "build-up conditions evaluated",
        extra=get_log_context(
            rank=ap.n,
            mode="of",
            check="buildup_conditions",
            duration_ms=round((time.perf_counter() - started) * 1000, 1),
            verdict=verdict_of(report).value,
        ),
    )
    return report

