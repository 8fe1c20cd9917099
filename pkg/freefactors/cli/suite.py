"""The acceptance suite: property checks against oracles plus the exact counts."""

from __future__ import annotations

import itertools
import random
import time
from collections.abc import Callable
from math import comb

from freefactors.complex import (
    Verdict,
    all_sticks,
    bonded_triples,
    fake_family,
    iota_action_check,
    nielsen_adjacent,
    of3_report,
    overlap_report,
    snops,
    standard_apartment,
    superstick_listing_discrepancies,
    supersticks,
    twisted_apartment,
    verdict_of,
)
from freefactors.complex.sticks import KNOWN_LISTING_DISCREPANCIES
from freefactors.core.config import settings
from freefactors.core.logging import get_log_context, get_logger
from freefactors.graphs import core_size, fold, iso, wedge_of_loops
from freefactors.oracles import (
    complement_search,
    has_one_occurrence,
    intersection_rank,
    membership_disagreements,
    random_generators,
)
from freefactors.reports import Report
from freefactors.subgroups import (
    Mode,
    antipodal_af,
    injrad_growth,
    intersect,
    is_free_factor,
    standard_factor,
    subgroup_of,
)
from freefactors.words import Alphabet, Word, random_word

logger = get_logger(__name__)


def folding_confluence(report: Report, rng: random.Random, samples: int) -> None:
    bad = []
    for _ in range(samples):
        n = rng.randint(2, 4)
        gens = random_generators(n, rng)
        graph = wedge_of_loops(gens, n)
        reference = fold(graph)
        shuffled = fold(graph, random.Random(rng.random()))
        if shuffled != reference or iso(shuffled, reference) is None:
            bad.append(", ".join(map(str, gens)))
    report.add("folding confluence", not bad, f"{samples} generator sets", bad[:5])


def membership(report: Report, rng: random.Random, samples: int) -> None:
    bad = []
    for _ in range(samples):
        n = rng.randint(2, 3)
        gens = random_generators(n, rng, max_words=3, max_length=4)
        h = subgroup_of(gens, n)
        bad.extend(str(w) for w in membership_disagreements(h, gens))
    report.add("membership against products", not bad, f"{samples} subgroups", bad[:5])


def intersection(report: Report, rng: random.Random, samples: int) -> None:
    bad = []
    checked = attempts = 0
    while checked < samples and attempts < 20 * samples:
        attempts += 1
        gens1 = random_generators(2, rng, max_words=2, max_length=3)
        gens2 = random_generators(2, rng, max_words=2, max_length=3)
        h1, h2 = subgroup_of(gens1, 2), subgroup_of(gens2, 2)
        if core_size(h1.graph) > 8 or core_size(h2.graph) > 8:
            continue
        based, _ = intersect(h1, h2)
        longest = max((len(w) for w in based.generators()), default=0)
        if longest > 6:
            continue
        checked += 1
        if intersection_rank(h1, h2, longest) != based.rank:
            bad.append(f"{', '.join(map(str, gens1))} ∩ {', '.join(map(str, gens2))}")
    report.add("intersection rank against enumeration", not bad, f"{checked} pairs", bad[:5])


def antipodality(report: Report, rng: random.Random, samples: int, max_rank: int) -> None:
    bad = []
    for _ in range(samples):
        n = rng.randint(3, max(3, max_rank))
        u = random_word(n, rng.randint(1, 10), rng)
        if u.is_trivial:
            continue
        if antipodal_af(standard_factor(n, n - 1), u) != has_one_occurrence(u, n):
            bad.append(str(u))
    report.add("antipodality against one a_n occurrence", not bad, f"{samples} words", bad[:5])


def counts(report: Report, max_rank: int) -> None:
    for mode, per_face in ((Mode.AF, 4), (Mode.OF, 2)):
        ap = standard_apartment(Alphabet(3).generators(), mode)
        triples = len(bonded_triples(ap, (1, 2, 3)))
        listed = len(supersticks(ap, (1, 2, 3)))
        expected = (8, 24) if mode is Mode.AF else (4, 8)
        report.add(
            f"Δ(a,b,c) {mode.value}: bonded triples and supersticks",
            (triples, listed) == expected,
            f"{triples} triples, {listed} supersticks",
        )
        for n in range(3, max_rank + 1):
            ap = standard_apartment(Alphabet(n).generators(), mode)
            found = len(all_sticks(ap))
            report.add(
                f"n={n} {mode.value}: {per_face}·C(n,2) sticks",
                found == per_face * comb(n, 2),
                str(found),
            )
    for n in range(3, max_rank + 1):
        cube = snops(standard_apartment(Alphabet(n).generators(), Mode.AF))
        detail = f"{len(cube.snops)} snops, {len(cube.edges)} edges"
        report.add(f"n={n}: 2^n snops", len(cube.snops) == 2**n, detail)
    discrepancies = superstick_listing_discrepancies()
    report.add(
        "reference superstick listing",
        discrepancies == list(KNOWN_LISTING_DISCREPANCIES),
        "entries that are not supersticks",
        discrepancies,
    )


def fakes(report: Report, max_rank: int) -> None:
    for n in range(3, max_rank + 1):
        family = fake_family(n)
        report.add(
            f"bridge family n={n} is fake with antipodal faces",
            family.report.passed,
            f"{len(family.report.checks)} checks",
            [c.name for c in family.report.failed],
        )


def twisted(report: Report, bound: int) -> None:
    inner = of3_report(twisted_apartment(), bound)
    verdict = verdict_of(inner)
    passed = None if verdict is Verdict.INCONCLUSIVE else verdict is Verdict.FAKE
    report.add("twisted rank-3 apartment is fake", passed, verdict.value)


def iota(report: Report, max_rank: int) -> None:
    for n in range(3, min(max_rank, 4) + 1):
        inner = iota_action_check(standard_apartment(Alphabet(n).generators(), Mode.OF))
        report.add(f"ι action n={n}", inner.passed, f"{len(inner.checks)} classes")


def overlap(report: Report, max_rank: int) -> None:
    for n, mode in itertools.product(range(3, min(max_rank, 4) + 1), (Mode.AF, Mode.OF)):
        d0 = standard_apartment(Alphabet(n).generators(), mode)
        inner = overlap_report(d0, nielsen_adjacent(d0, 1, 2))
        exceptions = inner.checks[-1]
        report.add(f"Nielsen overlap n={n} {mode.value}", inner.passed, exceptions.detail)


def injectivity_radius(report: Report) -> None:
    values = injrad_growth(3, subgroup_of([Word((1,))], 3), 12)
    running = list(itertools.accumulate(values, max))
    report.add(
        "injectivity radius grows under f0",
        running[-1] >= 3 and running[-1] > values[0],
        " ".join(map(str, values)),
    )


def _corpus() -> list[Word]:
    alphabet = Alphabet(3)
    ap = standard_apartment(alphabet.generators(), Mode.AF)
    words = alphabet.generators() + [s.word for s in all_sticks(ap)]
    words += [s.word for s in supersticks(ap, (1, 2, 3))]
    imprimitive = "aa bbb cc abAB acAC bcBC aabb abba aabbcc abcabc abcABC"
    return words + [alphabet.parse(t) for t in imprimitive.split()]


def whitehead_against_certificates(report: Report) -> None:
    bad = []
    corpus = _corpus()
    for w in corpus:
        decided = is_free_factor(subgroup_of([w], 3)) is not None
        certified = complement_search(w, 3) is not None
        if decided != certified:
            bad.append(str(w))
    report.add("Whitehead test against complement search", not bad, f"{len(corpus)} words", bad)


def run_suite(max_rank: int = 5, seed: int | None = None, bound: int | None = None) -> Report:
    seed = settings.seed if seed is None else seed
    bound = settings.loop_search_bound if bound is None else bound
    rng = random.Random(seed)
    report = Report(title=f"acceptance suite (ranks ≤ {max_rank}, seed={seed})")
    steps: list[tuple[str, Callable[[], None]]] = [
        ("folding", lambda: folding_confluence(report, rng, settings.suite_fold_samples)),
        ("membership", lambda: membership(report, rng, settings.suite_membership_samples)),
        ("intersection", lambda: intersection(report, rng, settings.suite_intersection_samples)),
        (
            "antipodality",
            lambda: antipodality(report, rng, settings.suite_antipodal_samples, max_rank),
        ),
        ("counts", lambda: counts(report, max_rank)),
        ("fakes", lambda: fakes(report, max_rank)),
        ("twisted", lambda: twisted(report, bound)),
        ("iota", lambda: iota(report, max_rank)),
        ("overlap", lambda: overlap(report, max_rank)),
        ("injectivity", lambda: injectivity_radius(report)),
        ("whitehead", lambda: whitehead_against_certificates(report)),
    ]
    for name, step in steps:
        started = time.perf_counter()
        logger.debug("suite check started", extra=get_log_context(check=name, seed=seed))
        step()
        logger.debug(
            "suite check finished",
            extra=get_log_context(
                check=name,
                seed=seed,
                duration_ms=round((time.perf_counter() - started) * 1000, 1),
            ),
        )
    for check in report.inconclusive:
        logger.warning("inconclusive check", extra=get_log_context(check=check.name))
    return report
