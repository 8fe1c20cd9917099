"""Tests for the command-line interface."""

import json
from io import StringIO

import pytest

from freefactors.cli.main import EXIT_FAILED, EXIT_OK, EXIT_USAGE, run
from freefactors.graphs import dumps, rose


def invoke(*argv: str) -> tuple[int, str, str]:
    out, err = StringIO(), StringIO()
    code = run(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


class TestParsing:
    """Test usage errors and help."""

    def test_help(self):
        code, out, err = invoke("--help")
        assert code == EXIT_OK
        assert out.startswith("usage: freefactors")
        assert err == ""

    def test_missing_command(self):
        assert invoke()[0] == EXIT_USAGE

    def test_unknown_option(self):
        assert invoke("member", "--subgroup", "a", "--word", "a", "--frobnicate")[0] == EXIT_USAGE

    def test_usage_error_written_to_err(self):
        code, out, err = invoke("antipodal", "--factor", "a, b")
        assert code == EXIT_USAGE
        assert out == ""
        assert "usage: freefactors antipodal" in err
        assert "--word" in err

    def test_bad_word(self):
        code, out, err = invoke("member", "--subgroup", "a", "--word", "a?b")
        assert code == EXIT_USAGE
        assert out == ""
        assert err.startswith("error: ")

    def test_letter_out_of_rank(self):
        code, _, err = invoke("member", "-n", "2", "--subgroup", "a", "--word", "c")
        assert code == EXIT_USAGE
        assert "error:" in err


class TestGraphCommands:
    """Test fold, core and graph input files."""

    def test_fold(self):
        code, out, _ = invoke("fold", "a, b, ab")
        assert code == EXIT_OK
        lines = out.splitlines()
        assert lines[0] == "n=3 base=0"
        assert len(lines) == 3

    def test_core_unpointed(self):
        code, out, _ = invoke("core", "--unpointed", "baB")
        assert code == EXIT_OK
        assert out.splitlines()[1].endswith(" 1")
        assert len(out.splitlines()) == 2

    def test_graph_file(self, tmp_path):
        path = tmp_path / "rose.txt"
        path.write_text(dumps(rose(3)))
        code, out, _ = invoke("core", "--graph", str(path))
        assert code == EXIT_OK
        assert out.splitlines()[0] == "n=3 base=0"
        assert len(out.splitlines()) == 4

    def test_graph_file_rank_mismatch(self, tmp_path):
        path = tmp_path / "rose.txt"
        path.write_text(dumps(rose(2)))
        code, _, err = invoke("core", "-n", "3", "--graph", str(path))
        assert code == EXIT_USAGE
        assert err.startswith("error: ")

    def test_missing_graph_file(self, tmp_path):
        code, _, err = invoke("fold", "--graph", str(tmp_path / "absent.txt"))
        assert code == EXIT_USAGE
        assert err.startswith("error: ")


class TestSubgroupCommands:
    """Test member, intersect, factor and antipodal."""

    def test_member(self):
        code, out, _ = invoke("member", "--subgroup", "ab, aB", "--word", "abbA")
        assert code == EXIT_OK
        assert out == "member: true\n"

    def test_non_member_exits_one(self):
        code, out, _ = invoke("member", "--subgroup", "ab", "--word", "a")
        assert code == EXIT_FAILED
        assert out == "member: false\n"

    def test_intersect(self):
        code, out, _ = invoke("intersect", "--left", "a, b", "--right", "a, c")
        assert code == EXIT_OK
        assert out == "based: ⟨a⟩\n"

    def test_factor(self):
        code, out, _ = invoke("factor", "ab, c")
        assert code == EXIT_OK
        assert ": free factor, complement " in out

    def test_not_a_factor(self):
        code, out, _ = invoke("factor", "aa")
        assert code == EXIT_FAILED
        assert out == "⟨aa⟩: not a free factor\n"

    def test_factor_of_full_rank(self):
        code, _, err = invoke("factor", "a, b, c")
        assert code == EXIT_USAGE
        assert err.startswith("error: ")

    @pytest.mark.parametrize(
        ("mode", "code", "answer"), [("af", EXIT_FAILED, "false"), ("of", EXIT_OK, "true")]
    )
    def test_antipodal_by_mode(self, mode, code, answer):
        result = invoke("antipodal", "--mode", mode, "--factor", "a, b", "--word", "cbcBC")
        assert result[0] == code
        assert result[1] == f"antipodal: {answer}\n"

    @pytest.mark.parametrize("mode", ["af", "of"])
    def test_antipodal_needs_a_factor(self, mode):
        """⟨aa, b⟩ has rank 2 but is not a free factor of F_3."""
        code, out, err = invoke("antipodal", "--mode", mode, "--factor", "aa, b", "--word", "c")
        assert code == EXIT_USAGE
        assert out == ""
        assert err.startswith("error: ")
        assert "not a free factor" in err

    def test_json_output(self):
        code, out, _ = invoke("member", "--json", "--subgroup", "a", "--word", "aa")
        payload = json.loads(out)
        assert code == EXIT_OK
        assert payload["command"] == "member"
        assert payload["ok"] is True
        assert payload["report"] is None


class TestApartmentCommands:
    """Test the apartment, sticks, snops, supersticks and overlap commands."""

    def test_standard_apartment(self):
        code, out, _ = invoke("apartment")
        assert code == EXIT_OK
        assert out.rstrip().endswith("result: PASS")

    def test_non_antipodal_example_fails(self):
        code, out, _ = invoke("apartment", "--example", "non-antipodal")
        assert code == EXIT_FAILED
        assert "[fail] opposite ⟨accb⟩ ⊥ ⟨a, b⟩" in out

    def test_example_needs_rank_three(self):
        code, _, err = invoke("apartment", "-n", "4", "--example", "unspanned")
        assert code == EXIT_USAGE
        assert err.startswith("error: ")

    def test_of_apartment_json(self):
        code, out, _ = invoke("apartment", "--mode", "of", "--json")
        payload = json.loads(out)
        assert code == EXIT_OK
        names = [c["name"] for c in payload["report"]["checks"]]
        assert any(name.startswith("OF_3 potential stick at ") for name in names)

    def test_sticks(self):
        code, out, _ = invoke("sticks")
        assert code == EXIT_OK
        lines = out.splitlines()
        assert lines[0] == "(1,2): ⟨ab⟩ ⟨ba⟩ ⟨Ab⟩ ⟨aB⟩"
        assert len(lines) == 3

    def test_snops(self, tmp_path):
        path = tmp_path / "cube.dot"
        code, out, _ = invoke("snops", "--dot", str(path))
        assert code == EXIT_OK
        assert "edges: 12" in out
        assert path.read_text().startswith("graph snops {")

    def test_supersticks(self):
        code, out, _ = invoke("supersticks", "--mode", "of")
        assert code == EXIT_OK
        assert out.splitlines()[-1] == "count: 8"

    def test_overlap(self):
        code, out, _ = invoke("overlap", "--nielsen", "1,2")
        assert code == EXIT_OK
        assert "3 exceptions, 3 expected" in out

    def test_fake_family(self):
        code, out, _ = invoke("fake7", "-n", "3")
        assert code == EXIT_OK
        assert out.rstrip().endswith("result: PASS")


class TestDot:
    """Test DOT export to stdout and to a file."""

    def test_graph_to_stdout(self):
        code, out, _ = invoke("dot", "a, bab")
        assert code == EXIT_OK
        assert out.startswith("digraph core {")

    def test_apartment_to_file(self, tmp_path):
        path = tmp_path / "apartment.dot"
        code, out, _ = invoke("dot", "--what", "apartment", "--dot", str(path))
        assert code == EXIT_OK
        assert out == f"wrote {path}\n"
        assert path.read_text().startswith("graph apartment {")
