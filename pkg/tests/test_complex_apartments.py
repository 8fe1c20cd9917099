"""Tests for apartments: construction, verification, antipodal faces and DOT export."""

import pytest

from freefactors.complex import (
    FactorVertex,
    antipodal_faces_check,
    apartment_from_assignment,
    cube_to_dot,
    is_adjacent,
    is_standard_af,
    nielsen_adjacent,
    non_antipodal_apartment,
    proper_subsets,
    realize,
    snops,
    standard_apartment,
    to_dot,
    unspanned_apartment,
    verify_apartment,
)
from freefactors.exceptions import (
    FaceError,
    ModeError,
    NonStandardApartmentError,
    NotABasisError,
    NotAFactorError,
)
from freefactors.reports import CheckStatus
from freefactors.subgroups import Mode
from freefactors.words import Alphabet


class TestProperSubsets:
    """Test the index sets labelling apartment vertices."""

    def test_order(self):
        subsets = [sorted(s) for s in proper_subsets(3)]
        assert subsets == [[1], [2], [3], [1, 2], [1, 3], [2, 3]]

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_count(self, n):
        assert len(proper_subsets(n)) == 2**n - 2


class TestFactorVertex:
    """Test factor vertices and their equality in each mode."""

    def test_af_distinguishes_conjugates(self, abc):
        left = FactorVertex.from_words([abc.parse("a")], 3, Mode.AF)
        right = FactorVertex.from_words([abc.parse("baB")], 3, Mode.AF)
        assert left != right

    def test_of_identifies_conjugates(self, abc):
        left = FactorVertex.from_words([abc.parse("a")], 3, Mode.OF)
        right = FactorVertex.from_words([abc.parse("baB")], 3, Mode.OF)
        assert left == right
        assert hash(left) == hash(right)

    def test_labels(self, abc):
        words = abc.parse_list("a, b")
        assert FactorVertex.from_words(words, 3, Mode.AF).label == "⟨a, b⟩"
        assert FactorVertex.from_words(words, 3, Mode.OF).label == "[a, b]"

    def test_non_factor_rejected(self, abc):
        with pytest.raises(NotAFactorError):
            FactorVertex.from_words([abc.parse("aa")], 3, Mode.AF)

    def test_bad_complement_rejected(self, abc):
        with pytest.raises(NotAFactorError):
            FactorVertex.from_words(
                [abc.parse("a")], 3, Mode.AF, complement=abc.parse_list("b, cc")
            )

    def test_realize(self, abc):
        assert realize(abc.generators(), (1, -3, 2)) == abc.parse("aCb")


class TestStandardApartment:
    """Test Δ(b_1, …, b_n)."""

    def test_passes_verification(self, delta_af, delta_of):
        assert verify_apartment(delta_af).passed
        assert verify_apartment(delta_of).passed

    def test_vertex_lookup(self, delta_af):
        assert delta_af.vertex(2, 1).label == "⟨a, b⟩"
        assert delta_af.opposite(3) == delta_af.vertex(1, 2)
        assert len(delta_af.vertices()) == 6

    def test_missing_face(self, delta_af):
        with pytest.raises(FaceError):
            delta_af.vertex(1, 2, 3)

    def test_bad_face_indices(self, delta_af):
        with pytest.raises(FaceError):
            delta_af.check_indices(1, 1)
        with pytest.raises(FaceError):
            delta_af.check_indices(1, 4)

    def test_non_basis_rejected(self, abc):
        with pytest.raises(NotABasisError):
            standard_apartment(abc.parse_list("ab, aB, c"), Mode.AF)

    def test_rank_four(self):
        ap = standard_apartment(Alphabet(4).generators(), Mode.AF)
        assert len(ap.vertices()) == 14
        assert verify_apartment(ap).passed

    def test_is_standard(self, delta_af):
        assert is_standard_af(delta_af)

    def test_is_standard_needs_af(self, delta_of):
        with pytest.raises(ModeError):
            is_standard_af(delta_of)

    def test_opposite_faces_antipodal(self, delta_af, delta_of):
        assert antipodal_faces_check(delta_af).passed
        assert antipodal_faces_check(delta_of).passed

    def test_nielsen_adjacent(self, abc, delta_af):
        d1 = nielsen_adjacent(delta_af, 1, 2)
        assert d1.basis == tuple(abc.parse_list("ab, b, c"))
        d2 = nielsen_adjacent(delta_af, 1, 2, sign=-1)
        assert d2.basis[0] == abc.parse("aB")

    def test_adjacency_modes_must_match(self, delta_af, delta_of):
        with pytest.raises(ModeError):
            is_adjacent(delta_af.vertex(1), delta_of.vertex(1, 2))

    def test_adjacency_of_mode_up_to_conjugacy(self, abc, delta_of):
        inner = FactorVertex.from_words([abc.parse("caC")], 3, Mode.OF)
        assert is_adjacent(inner, delta_of.vertex(1, 2))


class TestExtensionalApartments:
    """Test apartments given vertex by vertex."""

    def test_unspanned_is_valid_but_not_standard(self):
        ap = unspanned_apartment()
        assert verify_apartment(ap).passed
        assert not is_standard_af(ap)

    def test_non_antipodal_fails_antipodality(self):
        report = antipodal_faces_check(non_antipodal_apartment())
        assert not report.passed
        assert report.status_of("⟨accb⟩ ⊥ ⟨a, b⟩") is CheckStatus.FAIL

    def test_unsupported_basis_operations(self):
        with pytest.raises(NonStandardApartmentError):
            unspanned_apartment().require_basis()

    def test_adjacency_violation_reported(self, abc):
        gens = {
            frozenset(k): abc.parse_list(v)
            for k, v in {
                (1,): "a",
                (2,): "b",
                (3,): "c",
                (1, 2): "a, b",
                (1, 3): "a, c",
                (2, 3): "a, c",
            }.items()
        }
        report = verify_apartment(apartment_from_assignment(3, Mode.AF, gens))
        assert report.status_of("adjacency") is CheckStatus.FAIL
        assert report.status_of("injective") is CheckStatus.FAIL
        assert report.status_of("ranks") is CheckStatus.PASS

    def test_incomplete_assignment_reported(self, abc):
        gens = {frozenset((1,)): [abc.parse("a")], frozenset((1, 2)): abc.parse_list("a, b")}
        report = verify_apartment(apartment_from_assignment(3, Mode.AF, gens))
        assert report.status_of("complete") is CheckStatus.FAIL
        assert report.status_of("adjacency") is CheckStatus.PASS


class TestExport:
    """Test the DOT renderings of apartments and the snop cube."""

    def test_apartment_hasse_diagram(self, delta_af):
        dot = to_dot(delta_af)
        assert dot.startswith("graph apartment {")
        assert "rankdir=BT;" in dot
        assert 'v12 [label="⟨a, b⟩"];' in dot
        assert dot.count(" -- ") == 6

    def test_cube(self, delta_af):
        dot = cube_to_dot(snops(delta_af))
        assert dot.startswith("graph snops {")
        assert "s7 [label=" in dot
        assert dot.count(" -- ") == 12
