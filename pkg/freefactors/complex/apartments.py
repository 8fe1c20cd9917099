"""Apartments: construction, verification and antipodal faces."""

from __future__ import annotations

from collections.abc import Mapping, Sequence

from freefactors.complex.models import Apartment, FactorVertex, proper_subsets
from freefactors.core.logging import get_log_context, get_logger
from freefactors.exceptions import ComplexError, ModeError, NotABasisError, VerificationError
from freefactors.reports import Report
from freefactors.subgroups import (
    Mode,
    antipodal_af,
    antipodal_of_fold,
    conjugate_subgroup_into,
    contains,
    is_basis,
)
from freefactors.words import Alphabet, Word

logger = get_logger(__name__)


def standard_apartment(basis: Sequence[Word], mode: Mode) -> Apartment:
    """Δ(b_1, …, b_n): the factor ⟨b_i : i ∈ S⟩ for every proper subset S."""
    n = len(basis)
    if n < 2:
        raise ComplexError(f"apartments need n >= 2, got {n}")
    if not is_basis(basis, n):
        raise NotABasisError(f"{', '.join(map(str, basis))} is not a basis of F_{n}")
    assignment: dict[frozenset[int], FactorVertex] = {}
    for subset in proper_subsets(n):
        words = [basis[i - 1] for i in sorted(subset)]
        rest = [basis[j - 1] for j in range(1, n + 1) if j not in subset]
        assignment[subset] = FactorVertex.from_words(words, n, mode, complement=rest)
    ap = Apartment(n, mode, assignment, tuple(basis))
    logger.debug(
        "built standard apartment",
        extra=get_log_context(rank=n, mode=mode.value, operation="standard_apartment"),
    )
    return ap


def apartment_from_assignment(
    n: int,
    mode: Mode,
    generators: Mapping[frozenset[int], Sequence[Word]],
    complements: Mapping[frozenset[int], Sequence[Word]] | None = None,
) -> Apartment:
    """Extensional apartment; vertices without a supplied complement get one by descent."""
    complements = complements or {}
    assignment = {
        subset: FactorVertex.from_words(words, n, mode, complements.get(subset))
        for subset, words in generators.items()
    }
    return Apartment(n, mode, assignment)


def is_adjacent(smaller: FactorVertex, larger: FactorVertex) -> bool:
    """Inclusion (AF) or inclusion of a conjugate (OF)."""
    if smaller.mode is not larger.mode:
        raise ModeError(larger.mode.value, smaller.mode.value)
    if smaller.mode is Mode.AF:
        return all(contains(larger.subgroup, w) for w in smaller.subgroup.generators())
    return conjugate_subgroup_into(smaller.subgroup, larger.subgroup) is not None


def verify_apartment(ap: Apartment) -> Report:
    report = Report(title=f"apartment check (n={ap.n}, mode={ap.mode.value})")
    subsets = proper_subsets(ap.n)
    missing = [sorted(s) for s in subsets if s not in ap.assignment]
    report.add("complete", not missing, f"{len(missing)} subsets unassigned", missing)

    wrong_rank = [
        f"{sorted(s)}: {v.label} has rank {v.rank}"
        for s, v in ap.assignment.items()
        if v.rank != len(s)
    ]
    report.add("ranks", not wrong_rank, f"{len(wrong_rank)} violations", wrong_rank)

    not_adjacent = []
    for small in subsets:
        for large in subsets:
            if small < large and small in ap.assignment and large in ap.assignment:
                if not is_adjacent(ap.assignment[small], ap.assignment[large]):
                    not_adjacent.append(
                        f"{ap.assignment[small].label} ⊄ {ap.assignment[large].label}"
                    )
    report.add("adjacency", not not_adjacent, f"{len(not_adjacent)} violations", not_adjacent)

    seen: dict[object, frozenset[int]] = {}
    repeated = []
    for s in subsets:
        if s not in ap.assignment:
            continue
        key = ap.assignment[s].key
        if key in seen:
            repeated.append(f"{sorted(seen[key])} and {sorted(s)}")
        else:
            seen[key] = s
    report.add("injective", not repeated, f"{len(repeated)} repeated vertices", repeated)
    return report


def is_standard_af(ap: Apartment) -> bool:
    """Whether the rank-1 vertices of an AF apartment form a basis."""
    if ap.mode is not Mode.AF:
        raise ModeError(Mode.AF.value, ap.mode.value)
    words = [v.subgroup.generators()[0] for v in ap.rank_one()]
    return is_basis(words, ap.n)


def antipodal(vertex: FactorVertex, hyperplane: FactorVertex) -> bool:
    """Mode-appropriate antipodality of a rank-1 vertex and a rank n−1 vertex."""
    u = vertex.subgroup.generators()[0]
    if vertex.mode is Mode.AF:
        return antipodal_af(hyperplane.subgroup, u, verify=False)
    return antipodal_of_fold(hyperplane.subgroup, u, verify=False)


def antipodal_faces_check(ap: Apartment) -> Report:
    report = Report(title=f"opposite-face antipodality (n={ap.n}, mode={ap.mode.value})")
    for i in range(1, ap.n + 1):
        v, opposite = ap.vertex(i), ap.opposite(i)
        report.add(f"{v.label} ⊥ {opposite.label}", antipodal(v, opposite))
    return report


def nielsen_adjacent(ap: Apartment, i: int, j: int, sign: int = 1) -> Apartment:
    """Standard apartment on the basis with b_i replaced by b_i b_j^sign."""
    basis = list(ap.require_basis())
    ap.check_indices(i, j)
    basis[i - 1] = basis[i - 1] * (basis[j - 1] if sign > 0 else basis[j - 1].inverse())
    return standard_apartment(basis, ap.mode)


def _from_texts(mode: Mode, texts: Mapping[tuple[int, ...], str]) -> Apartment:
    alphabet = Alphabet(3)
    gens = {frozenset(k): alphabet.parse_list(v) for k, v in texts.items()}
    ap = apartment_from_assignment(3, mode, gens)
    report = verify_apartment(ap)
    if not report.passed:
        raise VerificationError(report.to_text())
    return ap


def unspanned_apartment(mode: Mode = Mode.AF) -> Apartment:
    """Rank-1 vertices a, ab², c; the factor ⟨a, b⟩ is not spanned by its neighbours."""
    return _from_texts(
        mode,
        {
            (1,): "a",
            (2,): "abb",
            (3,): "c",
            (1, 2): "a, b",
            (2, 3): "abb, c",
            (1, 3): "a, c",
        },
    )


def non_antipodal_apartment(mode: Mode = Mode.AF) -> Apartment:
    """Rank-1 vertices a, b, ac²b; ac²b is not antipodal to ⟨a, b⟩."""
    return _from_texts(
        mode,
        {
            (1,): "a",
            (2,): "b",
            (3,): "accb",
            (1, 2): "a, b",
            (2, 3): "b, acc",
            (1, 3): "a, ccb",
        },
    )
