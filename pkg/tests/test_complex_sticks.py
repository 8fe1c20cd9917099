"""Tests for sticks, bonded triples, snops and supersticks of Δ(a,b,c)."""

import logging
import random

import pytest

from freefactors.complex import (
    FactorVertex,
    all_sticks,
    bonded_triples,
    carried,
    iota_action_check,
    is_adjacent,
    signed_permutation_action,
    snops,
    standard_apartment,
    stick_characterization_check,
    stick_classes,
    stick_orbits,
    sticks_of,
    superstick_as_intersection,
    superstick_characterization_check,
    superstick_listing_discrepancies,
    supersticks,
    two_sphere,
)
from freefactors.exceptions import ModeError, RankPreconditionError
from freefactors.subgroups import Mode, contains, subgroup_of
from freefactors.words import Alphabet, BasisMap, Word


def primitive_corpus(ap, size: int = 200, seed: int = 20240229) -> list[FactorVertex]:
    """Rank-1 factors φ(a_i) for random Nielsen products φ, sticks excluded."""
    rng = random.Random(seed)
    n = ap.n
    taken = {s.key for s in all_sticks(ap)}
    corpus: list[FactorVertex] = []
    while len(corpus) < size:
        phi = BasisMap.identity(n)
        for _ in range(rng.randint(1, 6)):
            i, j = rng.sample(range(1, n + 1), 2)
            phi = BasisMap.nielsen(n, i, j, rng.choice([1, -1]), rng.random() < 0.5).compose(phi)
        i = rng.randint(1, n)
        complement = [phi(Word((j,))) for j in range(1, n + 1) if j != i]
        vertex = FactorVertex.from_words([phi(Word((i,)))], n, ap.mode, complement)
        if vertex.key not in taken:
            taken.add(vertex.key)
            corpus.append(vertex)
    return corpus


class TestSticks:
    """Test the sticks of standard apartments."""

    def test_af_sticks_at_a_face(self, delta_af):
        words = [str(s.word) for s in sticks_of(delta_af, 1, 2)]
        assert words == ["ab", "ba", "Ab", "aB"]

    def test_of_sticks_at_a_face(self, delta_of):
        """[ab] = [ba] and [Ab] = [aB] as unoriented classes."""
        assert len(sticks_of(delta_of, 2, 1)) == 2

    @pytest.mark.parametrize(("mode", "per_face"), [(Mode.AF, 4), (Mode.OF, 2)])
    @pytest.mark.parametrize("n", [3, 4])
    def test_totals(self, mode, per_face, n):
        ap = standard_apartment(Alphabet(n).generators(), mode)
        assert len(all_sticks(ap)) == per_face * n * (n - 1) // 2

    def test_classes(self, delta_af):
        same, mixed = stick_classes(delta_af, 1, 3)
        assert [str(s.word) for s in same] == ["ac", "ca"]
        assert [str(s.word) for s in mixed] == ["Ac", "aC"]

    def test_sticks_are_adjacent_to_their_face(self, delta_af):
        for stick in all_sticks(delta_af):
            face = delta_af.vertex(*stick.face)
            assert is_adjacent(stick.vertex, face)
            assert stick_characterization_check(stick.vertex, delta_af)

    @pytest.mark.parametrize("text", ["a", "abc", "aab"])
    def test_characterization_rejects(self, abc, delta_af, text):
        c = FactorVertex.from_words([abc.parse(text)], 3, Mode.AF)
        assert not stick_characterization_check(c, delta_af)

    @pytest.mark.parametrize("fixture", ["delta_af", "delta_of"])
    def test_characterization_rejects_random_primitives(self, request, fixture):
        ap = request.getfixturevalue(fixture)
        corpus = primitive_corpus(ap)
        assert len(corpus) == 200
        assert not any(stick_characterization_check(c, ap) for c in corpus)

    def test_characterization_needs_rank_one(self, delta_af):
        with pytest.raises(RankPreconditionError):
            stick_characterization_check(delta_af.vertex(1, 2), delta_af)


class TestSnops:
    """Test bonded triples and the snop cube."""

    @pytest.mark.parametrize(("fixture", "count"), [("delta_af", 8), ("delta_of", 4)])
    def test_bonded_triples(self, request, fixture, count):
        ap = request.getfixturevalue(fixture)
        assert len(bonded_triples(ap, (1, 2, 3))) == count

    def test_bonded_triple_spans_one_factor(self, delta_af):
        for x, y, z in bonded_triples(delta_af, (3, 1, 2)):
            assert (x.face, y.face, z.face) == ((1, 2), (1, 3), (2, 3))

    def test_of_bonded_triples(self, abc, delta_of):
        def key(text):
            return FactorVertex.from_words([abc.parse(text)], 3, Mode.OF).key

        expected = {
            frozenset(key(t) for t in triple)
            for triple in (
                ("ab", "Bc", "ac"),
                ("ab", "bc", "Ac"),
                ("Ab", "bc", "ac"),
                ("Ab", "Bc", "Ac"),
            )
        }
        found = {frozenset(s.key for s in t) for t in bonded_triples(delta_of, (1, 2, 3))}
        assert found == expected

    @pytest.mark.parametrize("fixture", ["delta_af", "delta_of"])
    def test_two_sticks_determine_the_third(self, request, fixture):
        triples = [
            tuple(s.key for s in t)
            for t in bonded_triples(request.getfixturevalue(fixture), (1, 2, 3))
        ]
        for triple in triples:
            for drop in range(3):
                keep = [p for p in range(3) if p != drop]
                thirds = {t[drop] for t in triples if all(t[p] == triple[p] for p in keep)}
                assert thirds == {triple[drop]}

    def test_pair_span_holds_exactly_the_third(self, delta_af):
        for triple in bonded_triples(delta_af, (1, 2, 3)):
            for drop in range(3):
                pair = [s.word for p, s in enumerate(triple) if p != drop]
                span = subgroup_of(pair, 3)
                third = triple[drop]
                inside = [s for s in sticks_of(delta_af, *third.face) if contains(span, s.word)]
                assert [s.key for s in inside] == [third.key]

    def test_cube_rank_three(self, delta_af):
        cube = snops(delta_af)
        assert len(cube.snops) == 8
        assert len(cube.edges) == 12

    @pytest.mark.slow
    def test_cube_rank_four(self):
        cube = snops(standard_apartment(Alphabet(4).generators(), Mode.AF))
        assert len(cube.snops) == 16

    def test_snops_need_af(self, delta_of):
        with pytest.raises(ModeError):
            snops(delta_of)


class TestSupersticks:
    """Test supersticks and their characterizations."""

    @pytest.mark.parametrize(("fixture", "count"), [("delta_af", 24), ("delta_of", 8)])
    def test_counts(self, request, fixture, count):
        ap = request.getfixturevalue(fixture)
        assert len(supersticks(ap, (1, 2, 3))) == count

    def test_af_intersections(self, delta_af):
        """Every AF superstick is ⟨b_p b_q, b_r⟩ ∩ ⟨b_p, b_q b_r⟩."""
        for s in supersticks(delta_af, (1, 2, 3)):
            assert superstick_as_intersection(delta_af, s)

    @pytest.mark.parametrize("fixture", ["delta_af", "delta_of"])
    def test_characterization_accepts_supersticks(self, request, fixture):
        ap = request.getfixturevalue(fixture)
        for s in supersticks(ap, (1, 2, 3)):
            assert superstick_characterization_check(s.vertex, ap, (1, 2, 3))

    @pytest.mark.parametrize("fixture", ["delta_af", "delta_of"])
    def test_characterization_rejects_sticks(self, request, fixture):
        ap = request.getfixturevalue(fixture)
        for stick in all_sticks(ap):
            assert not superstick_characterization_check(stick.vertex, ap, (1, 2, 3))

    def test_characterization_rank_four(self):
        ap = standard_apartment(Alphabet(4).generators(), Mode.AF)
        for s in supersticks(ap, (1, 2, 4)):
            assert superstick_characterization_check(s.vertex, ap, (1, 2, 4))

    def test_iota_fixes_sticks_and_moves_supersticks(self, delta_of):
        report = iota_action_check(delta_of)
        assert report.passed
        assert len(report.checks) == 6 + 8

    def test_iota_needs_of(self, delta_af):
        with pytest.raises(ModeError):
            iota_action_check(delta_af)

    def test_reference_listing_discrepancy(self, caplog):
        caplog.set_level(logging.DEBUG, logger="freefactors")
        assert superstick_listing_discrepancies() == ["aCBc"]
        listing = [r for r in caplog.records if getattr(r, "check", None) == "superstick_listing"]
        assert [r.levelno for r in listing] == [logging.DEBUG]

    def test_unexpected_listing_discrepancy_warns(self, caplog):
        caplog.set_level(logging.DEBUG, logger="freefactors")
        assert superstick_listing_discrepancies(("abc", "aab")) == ["aab"]
        warnings = [r for r in caplog.records if r.levelno == logging.WARNING]
        assert [r.entries for r in warnings] == [["aab"]]

    def test_clean_listing_logs_nothing(self, caplog):
        caplog.set_level(logging.DEBUG, logger="freefactors")
        assert superstick_listing_discrepancies(("abc", "acb")) == []
        assert not [r for r in caplog.records if getattr(r, "check", None) == "superstick_listing"]

    def test_carried_by_a_rank_two_vertex(self, abc, delta_of):
        vertex = FactorVertex.from_words(abc.parse_list("ab, c"), 3, Mode.OF)
        found = {str(s.word) for s in carried(vertex, supersticks(delta_of, (1, 2, 3)))}
        assert found == {"abc", "abC"}


class TestSymmetries:
    """Test signed permutations acting on sticks, and the two-sphere."""

    def test_action_is_a_permutation(self, delta_af):
        action = signed_permutation_action(delta_af, BasisMap.transposition(3, 1, 2))
        assert sorted(action.values()) == list(range(12))

    def test_orbits_under_permutations(self, delta_af):
        """Same-sign sticks form one orbit; mixed-sign ones split by which letter is inverted."""
        maps = [BasisMap.transposition(3, 1, 2), BasisMap.transposition(3, 2, 3)]
        assert sorted(len(o) for o in stick_orbits(delta_af, maps)) == [3, 3, 6]

    def test_orbits_under_signed_permutations(self, delta_af):
        maps = [
            BasisMap.transposition(3, 1, 2),
            BasisMap.transposition(3, 2, 3),
            BasisMap.epsilon(3, 1),
        ]
        assert [len(o) for o in stick_orbits(delta_af, maps)] == [12]

    @pytest.mark.parametrize("fixture", ["delta_af", "delta_of"])
    def test_two_sphere(self, request, fixture):
        report = two_sphere(request.getfixturevalue(fixture), 1, 2, 3)
        assert report.passed
        assert report.checks[-1].detail == "V=8 E=9 F=3"
