"""Tests for recognising standard apartments of OF_n."""

import pytest

from freefactors.complex import (
    Verdict,
    barycentre_generation_check,
    buildup_conditions,
    face_verdict,
    non_antipodal_apartment,
    of3_report,
    of3_standardness,
    potential_stick_search,
    restrict_to_face,
    standard_apartment,
    unspanned_apartment,
    verdict_of,
    verify_apartment,
)
from freefactors.exceptions import ApartmentPreconditionError, ModeError
from freefactors.reports import Report
from freefactors.subgroups import Mode, antipodal_of_fold
from freefactors.words import Alphabet


@pytest.fixture(scope="module")
def delta4_of():
    return standard_apartment(Alphabet(4).generators(), Mode.OF)


class TestVerdict:
    """Test how report outcomes map to verdicts."""

    def test_all_passed(self):
        report = Report(title="t")
        report.add("x", True)
        assert verdict_of(report) is Verdict.STANDARD

    def test_failure_wins_over_inconclusive(self):
        report = Report(title="t")
        report.add("x", None)
        report.add("y", False)
        assert verdict_of(report) is Verdict.FAKE

    def test_inconclusive(self):
        report = Report(title="t")
        report.add("x", True)
        report.add("y", None)
        assert verdict_of(report) is Verdict.INCONCLUSIVE


class TestPotentialStickSearch:
    """Test the bounded search for rank-1 classes antipodal to given faces."""

    def test_finds_a_witness(self, delta_of):
        v = delta_of.vertex(1, 2)
        others = [delta_of.vertex(1, 3), delta_of.vertex(2, 3)]
        search = potential_stick_search(v, others, bound=8)
        assert search.witness is not None
        assert search.exhaustive
        assert all(antipodal_of_fold(o.subgroup, search.witness) for o in others)

    def test_candidates_tried_first(self, abc, delta_of):
        v = delta_of.vertex(1, 2)
        others = [delta_of.vertex(1, 3), delta_of.vertex(2, 3)]
        search = potential_stick_search(v, others, bound=8, candidates=[abc.parse("ab")])
        assert search.witness == abc.parse("ab")
        assert search.examined == 1

    def test_truncated_search_is_not_exhaustive(self):
        """[abb, c] carries no class antipodal to [a, c]; the loops never run out."""
        ap = unspanned_apartment(Mode.OF)
        search = potential_stick_search(ap.vertex(2, 3), [ap.vertex(1, 2), ap.vertex(1, 3)], 6)
        assert search.witness is None
        assert not search.exhaustive

    def test_needs_of(self, delta_af):
        with pytest.raises(ModeError):
            potential_stick_search(delta_af.vertex(1, 2), [delta_af.vertex(1, 3)])

    def test_needs_other_vertices(self, delta_of):
        with pytest.raises(ApartmentPreconditionError):
            potential_stick_search(delta_of.vertex(1, 2), [])


class TestRankThree:
    """Test the rank-3 standardness criterion."""

    def test_standard(self, delta_of):
        report = of3_report(delta_of)
        assert report.passed
        assert not report.inconclusive
        assert of3_standardness(delta_of) is Verdict.STANDARD

    def test_standard_after_nielsen_moves(self, abc):
        ap = standard_apartment(abc.parse_list("ab, cb, c"), Mode.OF)
        assert of3_standardness(ap) is Verdict.STANDARD

    def test_non_antipodal_apartment_is_fake(self):
        assert of3_standardness(non_antipodal_apartment(Mode.OF), search_bound=6) is Verdict.FAKE

    def test_needs_of(self, delta_af):
        with pytest.raises(ModeError):
            of3_report(delta_af)

    def test_needs_rank_three(self, delta4_of):
        with pytest.raises(ApartmentPreconditionError):
            of3_report(delta4_of)


class TestFaces:
    """Test link restriction and face verdicts."""

    def test_restrict_codimension_one(self, delta4_of):
        face = restrict_to_face(delta4_of, [1, 2, 4])
        assert face.n == 3
        assert face.mode is Mode.OF
        assert verify_apartment(face).passed
        assert face_verdict(face) is Verdict.STANDARD

    def test_restrict_to_rank_two(self, delta_of):
        face = restrict_to_face(delta_of, [1, 3])
        assert face.n == 2
        assert face_verdict(face) is Verdict.STANDARD

    def test_face_size_checked(self, delta_of):
        with pytest.raises(ApartmentPreconditionError):
            restrict_to_face(delta_of, [2])

    def test_restrict_needs_of(self, delta_af):
        with pytest.raises(ModeError):
            restrict_to_face(delta_af, [1, 2])


class TestBuildUp:
    """Test the build-up conditions for higher ranks."""

    def test_barycentres_generate(self, delta_of, delta4_of):
        assert barycentre_generation_check(delta_of).passed
        assert barycentre_generation_check(delta4_of).passed

    def test_rank_three(self, delta_of):
        report = buildup_conditions(delta_of)
        assert report.passed
        assert verdict_of(report) is Verdict.STANDARD

    @pytest.mark.slow
    def test_rank_four(self, delta4_of):
        report = buildup_conditions(delta4_of)
        assert report.passed
        assert face_verdict(delta4_of) is Verdict.STANDARD

    def test_needs_of(self, delta_af):
        with pytest.raises(ModeError):
            buildup_conditions(delta_af)
