import sys
import os
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))
"""
Tests for the command line interface
"""

import json
import time

from germlab.cli import run_command


def run_json(capsys, argv):
    code = run_command(argv + ["--format", "json"])
    return code, json.loads(capsys.readouterr().out)


class TestTreeCommand:
    """Test the tree subcommand"""

    def test_table(self, capsys):
        assert run_command(["tree", "--level", "4", "--format", "table"]) == 0
        out = capsys.readouterr().out
        assert out.startswith("level 4: 4 orbits")
        assert "ABB" in out

    def test_json_decorated(self, capsys):
        code, data = run_json(capsys, ["tree", "--level", "3", "--decorated"])
        assert code == 0
        assert data["count"] == 2
        assert data["orbits"][1]["decorated"] == "{3/1,2/1}"

    def test_dot(self, capsys, golden):
        assert run_command(["tree", "--level", "3", "--format", "dot"]) == 0
        assert capsys.readouterr().out == golden("tree_level3.dot")


class TestDioCommands:
    """Test the dio subcommands"""

    def test_solve(self, capsys):
        code, data = run_json(capsys, ["dio", "solve", "--k1", "5", "--k2", "3", "--q1", "3", "--q2", "1"])
        assert code == 0
        assert (data["aux"]["a1"], data["aux"]["a2"]) == (1, 1)
        assert data["checks"]["eq1_residual"] == 1

    def test_extend_defaults_to_bounded_solution(self, capsys):
        code, data = run_json(capsys, ["dio", "extend", "--k1", "3", "--k2", "2"])
        assert code == 0
        ext = data["extension"]
        assert (ext["q3"], ext["q4"], ext["m1"], ext["m2"]) == (4, 1, 0, 0)
        assert data["checks"]["violations"] == []

    def test_pr_inverses(self, capsys):
        assert run_command(["dio", "pr1-inverse", "--k", "5", "--q", "3", "--format", "table"]) == 0
        assert capsys.readouterr().out.strip() == "{5/3,3/1}"
        assert run_command(["dio", "pr-inverse", "--k1", "3", "--k2", "8", "--format", "table"]) == 0
        assert capsys.readouterr().out.strip() == "{8/5,3/1}"

    def test_non_solution_is_usage_error(self, capsys):
        assert run_command(["dio", "solve", "--k1", "5", "--k2", "3", "--q1", "1", "--q2", "1"]) == 2
        assert "does not satisfy" in capsys.readouterr().err

    def test_dot_unavailable(self, capsys):
        assert run_command(["dio", "solve", "--k1", "5", "--k2", "3", "--format", "dot"]) == 2


class TestChainCommands:
    """Test hj and resolve"""

    def test_hj(self, capsys):
        code, data = run_json(capsys, ["hj", "--k", "5", "--q", "3"])
        assert code == 0
        assert data == {"k": 5, "q": 3, "weights": [2, 3], "continuant": 5}

    def test_hj_dot(self, capsys, golden):
        assert run_command(["hj", "--k", "5", "--q", "3", "--format", "dot"]) == 0
        assert capsys.readouterr().out == golden("hj_5_3.dot")

    def test_resolve_trace(self, capsys):
        code, data = run_json(capsys, ["resolve", "--k1", "5", "--k2", "3", "--trace"])
        assert code == 0
        assert data["weights"] == [3, 2, 1, 3]
        assert data["sbar"] == [5, 3, 3, 1]
        assert [s["label"] for s in data["trace"]] == ["E2", "E2", "E1", None]

    def test_resolve_dot(self, capsys, golden):
        assert run_command(["resolve", "--k1", "2", "--k2", "1", "--format", "dot"]) == 0
        assert capsys.readouterr().out == golden("resolution_2_1.dot")


class TestClassifyCommand:
    """Test classify"""

    def test_json(self, capsys):
        code, data = run_json(capsys, ["classify", "--k1", "3", "--k2", "2"])
        assert code == 0
        assert data["family"] == "N"
        assert data["subcase"] == "(1,2)_{0_1}"

    def test_all_with_witness(self, capsys):
        assert run_command(["classify", "--k1", "6", "--k2", "5", "--all", "--witness", "--format", "table"]) == 0
        out = capsys.readouterr().out
        assert "(6,5): O degree 5" in out
        assert "(6,5): N degree 6" in out
        assert "witness a=" in out

    def test_cap(self, capsys):
        code, data = run_json(capsys, ["classify", "--k1", "10", "--k2", "9", "--max-degree", "4"])
        assert code == 0
        assert data["cross_checked"] is False

    def test_bad_pair(self, capsys):
        assert run_command(["classify", "--k1", "4", "--k2", "2"]) == 2

    def test_max_degree_out_of_range(self, capsys):
        assert run_command(["classify", "--k1", "3", "--k2", "2", "--max-degree", "50"]) == 2
        assert "max_degree must be between 3 and 10" in capsys.readouterr().err
        assert run_command(["classify", "--k1", "3", "--k2", "2", "--max-degree", "2"]) == 2

    def test_smooth_branch(self, capsys):
        code, data = run_json(capsys, ["classify", "--k1", "3", "--k2", "1"])
        assert code == 0
        assert (data["family"], data["degree"], data["class_count"]) == ("DOUBLE", 2, 1)


class TestVerifyCommand:
    """Test verify and the global options"""

    def test_suite_passes(self, capsys):
        code, data = run_json(capsys, ["verify", "--suite", "stmt5-3", "--bound", "4"])
        assert code == 0
        assert data["ok"] is True
        assert data["reports"][0]["failures"] == []

    def test_large_bound_capped_for_generation(self, capsys):
        started = time.perf_counter()
        code, data = run_json(capsys, ["verify", "--suite", "stmt5-3", "--bound", "100"])
        assert code == 0
        assert data["reports"][0]["bound"] == 7
        assert time.perf_counter() - started < 60

    def test_alias(self, capsys):
        code, data = run_json(capsys, ["verify", "--suite", "tree", "--bound", "30"])
        assert code == 0
        assert [r["suite"] for r in data["reports"]] == ["prop1-1"]

    def test_unknown_suite(self, capsys):
        assert run_command(["verify", "--suite", "bogus"]) == 2
        assert "unknown suite" in capsys.readouterr().err

    def test_config_file(self, capsys, sample_config_file):
        code = run_command(["--config", str(sample_config_file), "--quiet", "hj", "--k", "7", "--q", "3"])
        assert code == 0
        assert json.loads(capsys.readouterr().out)["weights"] == [3, 2, 2]

    def test_missing_config(self, capsys, temp_dir):
        assert run_command(["--config", str(temp_dir / "missing.yaml"), "hj", "--k", "5", "--q", "3"]) == 2

    def test_usage_error(self, capsys):
        assert run_command(["frobnicate"]) == 2
        assert run_command(["hj", "--k", "5"]) == 2
