import json

import pytest

from splitlink.cli import main
from splitlink.relations import RelationSystem


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestEval:
    def test_diagram(self, capsys):
        code, out, _ = run(capsys, "eval", "--diagram", "dc:+1,+2,+3,-1,-2,-3")
        assert code == 0
        assert out.strip() == "3·bubble"

    def test_bracket_with_ambient(self, capsys):
        code, out, _ = run(capsys, "eval", "--bracket",
                           "[1, 2 3 4][2, 3 4][3, 4][4, 2]", "--ambient", "0..4")
        assert code == 0
        assert out.strip() == "4·switch"

    def test_trivial_word(self, capsys):
        code, out, _ = run(capsys, "eval", "--word", "1 -1")
        assert code == 0
        assert out.strip() == "0"

    def test_tagged_terms_printed(self, capsys):
        code, out, _ = run(capsys, "eval", "--bracket", "[1, 2][1, 2]")
        assert code == 0
        assert "tagged: 1×tripod" in out

    def test_trace_lines(self, capsys):
        code, out, _ = run(capsys, "eval", "--word", "1 2 -1 -2", "--trace")
        assert code == 0
        assert "trace: single" in out

    def test_parse_error_exits_2(self, capsys):
        code, _, err = run(capsys, "eval", "--word", "1 2 -1")
        assert code == 2
        assert "generator 2" in err

    def test_json_stable(self, capsys):
        code, first, _ = run(capsys, "eval", "--diagram", "dc:+1,+2,-1,-2", "--json")
        assert code == 0
        code, second, _ = run(capsys, "eval", "--diagram", "dc:+1,+2,-1,-2", "--json")
        assert first == second
        assert json.loads(first)["pretty"] == "1·tripod"


class TestEnum:
    def test_graphs_drop_isolated(self, capsys):
        code, out, _ = run(capsys, "enum", "graphs", "4", "--drop-isolated")
        assert code == 0
        assert "(bubble)" in out
        assert "classes: 1" in out

    def test_diagrams(self, capsys):
        code, out, _ = run(capsys, "enum", "diagrams", "2")
        assert code == 0
        assert "classes: 2" in out

    def test_out_of_range_exits_2(self, capsys):
        code, _, err = run(capsys, "enum", "graphs", "9")
        assert code == 2
        assert "out of supported range" in err


class TestFourT:
    def test_m3_listing(self, capsys):
        code, out, _ = run(capsys, "fourt", "3")
        assert code == 0
        assert "relations: 2" in out

    def test_csv_export_then_rank(self, capsys, tmp_path):
        path = tmp_path / "rows.csv"
        code, _, _ = run(capsys, "fourt", "3", "--csv", str(path))
        assert code == 0
        code, out, _ = run(capsys, "rank", str(path))
        assert code == 0
        assert "forced_zero: ['bubble']" in out


class TestVerify:
    def test_all_targets_pass(self, capsys):
        code, out, _ = run(capsys, "verify", "all")
        assert code == 0
        assert "target all: PASS" in out
        assert "FAIL" not in out

    def test_single_target_json(self, capsys):
        code, out, _ = run(capsys, "verify", "lemma4_6", "--json")
        assert code == 0
        body = json.loads(out)
        assert body["passed"] is True
        assert body["environment"]["tool"] == "splitlink"

    def test_wrong_fixture_exits_1(self, capsys, tmp_path):
        fixtures = {
            "targets": {
                "lemma4_6": {
                    "claim": "deliberately wrong expectation",
                    "checks": [{
                        "name": "bogus",
                        "kind": "eval",
                        "claim": "this should fail",
                        "input": {"diagram": "dc:+1,+2,+3,-1,-2,-3"},
                        "expected": {"bubble": "7"},
                    }],
                }
            }
        }
        path = tmp_path / "fixtures.json"
        path.write_text(json.dumps(fixtures))
        code, out, _ = run(capsys, "verify", "lemma4_6", "--fixtures", str(path))
        assert code == 1
        assert "[FAIL] bogus" in out

    def test_unknown_target_exits_2(self, capsys):
        code, _, err = run(capsys, "verify", "nonsense")
        assert code == 2
        assert "unknown verify target" in err


class TestRank:
    def test_reads_csv_file(self, capsys, tmp_path):
        rs = RelationSystem()
        rs.add_row({"x": 3})
        rs.add_row({"x": 1, "y": 1})
        path = tmp_path / "relations.csv"
        path.write_text(rs.to_csv())
        code, out, _ = run(capsys, "rank", str(path))
        assert code == 0
        assert "rank: 2" in out
        assert "forced_zero: ['x', 'y']" in out

    def test_missing_file_exits_2(self, capsys, tmp_path):
        code, _, err = run(capsys, "rank", str(tmp_path / "absent.csv"))
        assert code == 2
        assert "cannot read" in err


class TestUsage:
    def test_no_command_exits_2(self, capsys):
        with pytest.raises(SystemExit) as excinfo:
            main([])
        assert excinfo.value.code == 2

    def test_eval_requires_exactly_one_input(self, capsys):
        with pytest.raises(SystemExit) as excinfo:
            main(["eval", "--word", "1 -1", "--diagram", "dc:+1,-1"])
        assert excinfo.value.code == 2
