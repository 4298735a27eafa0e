import json

import pytest

from ring_explorer import Report, __version__, emit_report, run


def invoke(capsys, *argv: str) -> tuple[int, str]:
    code = run(list(argv))
    return code, capsys.readouterr().out


class TestVerify:
    def test_holds(self, capsys):
        code, out = invoke(capsys, "verify", "--alg", "FP2", "--config", "G,W", "--n", "6")
        assert code == 0
        assert "perpetual exploration under fsync: holds" in out
        assert out.startswith(f"# ring-explorer {__version__}: ring-explorer verify")

    def test_fails_with_a_witness(self, capsys):
        code, out = invoke(capsys, "verify", "--alg", "AP3", "--config", "W,G,W", "--n", "9", "--model", "ssync")
        assert code == 1
        assert "under-covered" in out
        assert "uncovered: " in out

    def test_lasso_in_json(self, capsys):
        code, out = invoke(
            capsys, "verify", "--alg", "FP2", "--config", "G,W", "--n", "6", "--objective", "terminating", "--format", "json"
        )
        document = json.loads(out)
        assert code == 1
        assert document["outcome"] == "fails"
        assert document["witness"]["kind"] == "lasso"
        assert document["witness"]["cycle"]

    def test_json_is_deterministic(self, capsys):
        argv = ("verify", "--alg", "AP3", "--config", "W,W,G", "--n", "6", "--model", "async", "--format", "json")
        first = invoke(capsys, *argv)
        second = invoke(capsys, *argv)
        assert first == second
        assert "wall_time" not in json.loads(first[1])

    def test_timing_is_opt_in(self, capsys):
        _, out = invoke(capsys, "verify", "--alg", "FP2", "--config", "G,W", "--n", "6", "--format", "json", "--timing")
        assert "wall_time" in json.loads(out)

    def test_state_limit(self, capsys):
        code, out = invoke(
            capsys, "verify", "--alg", "AP3", "--config", "W,W,G", "--n", "6", "--model", "ssync", "--state-limit", "1"
        )
        assert code == 3
        assert out == ""


class TestUsageErrors:
    @pytest.mark.parametrize(
        "argv",
        [
            [],
            ["verify", "--alg", "FP2"],
            ["verify", "--alg", "FP2", "--config", "G,W", "--model", "lazy"],
            ["verify", "--alg", "FP9", "--config", "G,W", "--n", "6"],
            ["verify", "--alg", "FP2", "--config", "G,X", "--n", "6"],
            ["verify", "--alg", "FP2", "--config", "G,W", "--n", "2"],
            ["simulate", "--alg", "FP2", "--config", "G,W", "--n", "6", "--policy", "lazy"],
            ["audit", "--alg", "FP2", "--n", "6"],
            ["audit", "--alg", "FP2", "--n", "2", "--k", "2"],
            ["audit", "--alg", "FP2", "--n", "6", "--k", "0"],
            ["audit", "--alg", "FP2", "--n", "7", "--n-max", "6", "--k", "2"],
            ["verify", "--alg", "FP2", "--config", "G,W", "--n", "6", "--state-limit", "0"],
            ["simulate", "--alg", "FP2", "--config", "G,W", "--n", "6", "--max-steps", "-1"],
        ],
    )
    def test_exit_code_two(self, capsys, argv):
        assert run(argv) == 2
        assert capsys.readouterr().out == ""

    def test_help_exits_cleanly(self, capsys):
        assert run(["--help"]) == 0


class TestSimulate:
    def test_seeded_runs_repeat(self, capsys):
        argv = ("simulate", "--alg", "AP3", "--config", "W,W,G", "--n", "7", "--model", "async")
        first = invoke(capsys, *argv, "--policy", "random", "--seed", "3", "--max-steps", "25")
        second = invoke(capsys, *argv, "--policy", "random", "--seed", "3", "--max-steps", "25")
        assert first == second
        assert "steps: 25" in first[1]

    def test_scripted_policy(self, capsys, tmp_path):
        script = tmp_path / "steps.txt"
        script.write_text("fsync\nfsync 1=W-\n", encoding="utf-8")
        code, out = invoke(
            capsys, "simulate", "--alg", "FT3", "--config", "W,W,W", "--n", "5", "--policy", f"scripted:{script}", "--format", "json"
        )
        document = json.loads(out)
        assert code == 0
        assert document["steps"] == 2
        assert document["quiescent"] is False

    def test_first_policy_reaches_quiescence(self, capsys):
        code, out = invoke(capsys, "simulate", "--alg", "FT3", "--config", "W,W,W", "--n", "5")
        assert code == 0
        assert "steps: 3, quiescent: True, visited 5/5 nodes" in out


class TestOtherCommands:
    def test_classify(self, capsys):
        code, out = invoke(capsys, "classify", "--config", "G,.,.,G", "--n", "6")
        assert code == 0
        assert "territory" in out

    def test_classify_without_certificate(self, capsys):
        _, out = invoke(capsys, "classify", "--config", "G,W", "--n", "6", "--format", "json")
        assert json.loads(out)["certificate"] is None

    def test_cycles(self, capsys):
        code, out = invoke(capsys, "cycles")
        assert code == 0
        assert "{R2,R3,R7}" in out
        assert "{R2,R5,R7,R10}" in out.split("stationary:")[1]

    def test_audit(self, capsys):
        code, out = invoke(capsys, "audit", "--alg", "FP2", "--n", "6", "--n-max", "7", "--k", "2", "--no-towers", "--format", "json")
        document = json.loads(out)
        assert code == 0
        assert document["counts"]["solves"] == 2
        assert document["counts"]["discrepancy"] == 0
        assert document["expected_classes"] == {"6": 9, "7": 9}

    def test_audit_discrepancy(self, capsys):
        code, _ = invoke(capsys, "audit", "--alg", "FP2", "--n", "6", "--k", "2")
        assert code == 1

    def test_export_then_validate(self, capsys, tmp_path):
        code, out = invoke(capsys, "export", "--alg", "FP2")
        assert code == 0
        assert "@name FP2" in out
        path = tmp_path / "fp2.rules"
        path.write_text(out, encoding="utf-8")
        code, out = invoke(capsys, "validate", "--alg", str(path))
        assert code == 0
        assert "FP2: 2 rules, no issues" in out

    def test_validate_reports_issues(self, capsys, tmp_path):
        path = tmp_path / "bad.rules"
        path.write_text("S1 : W | (G) | W :: G, left\n", encoding="utf-8")
        code, out = invoke(capsys, "validate", "--alg", str(path))
        assert code == 1
        assert "S1" in out

    def test_malformed_rule_file(self, capsys, tmp_path):
        path = tmp_path / "broken.rules"
        path.write_text("S1 : W | (G) | W\n", encoding="utf-8")
        assert run(["validate", "--alg", str(path)]) == 2


class TestReport:
    def test_header_only(self):
        text = emit_report(Report("ring-explorer cycles", "nothing"))
        assert text.splitlines() == [f"# ring-explorer {__version__}: ring-explorer cycles", "# nothing"]

    def test_unknown_format(self):
        with pytest.raises(ValueError):
            emit_report(Report("x", "y"), "yaml")

    def test_document_carries_the_command(self):
        document = Report("ring-explorer export --alg FP2", "rule file", {"text": ""}, states=4).to_document()
        assert document["command"] == "ring-explorer export --alg FP2"
        assert document["states"] == 4
