import json

import pytest

from implicative.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out, json.loads(out)


def test_validate_shipped(capsys):
    code, _, report = run(capsys, "validate", "b2")
    assert code == 0 and report["exit_code"] == 0
    assert report["K"] == "1" and report["classical"] is True
    assert len(report["algebra"]["fingerprint"]) == 64


def test_validate_rejects_non_lattice(capsys, tmp_path):
    path = tmp_path / "anti.json"
    path.write_text(json.dumps({"elements": ["a", "b"], "order": []}))
    code, _, report = run(capsys, "validate", str(path))
    assert code == 3
    assert report["checks"][0]["verdict"] == "fail"


def test_validate_rejects_broken_implication(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"elements": ["0", "1"], "order": "chain",
                                "implication": [["0", "0"], ["0", "0"]], "separator": "top"}))
    code, _, _ = run(capsys, "validate", str(path))
    assert code == 3


def test_parse_errors(capsys, tmp_path):
    path = tmp_path / "x.json"
    path.write_text("{broken")
    assert run(capsys, "validate", str(path))[0] == 2
    assert run(capsys, "eval-term", "b2", "\\x.")[0] == 2
    assert run(capsys, "eval-term", "b2", "q")[0] == 2
    assert run(capsys, "eval-formula", "b2", "1", "[x] |- x in")[0] == 2


def test_eval_identity(capsys):
    code, _, report = run(capsys, "eval-term", "b2", "\\x.x")
    assert code == 0
    assert report["value"] == "1" and report["in_separator"] is True


def test_eval_term_outside_separator_still_exits_zero(capsys):
    code, _, report = run(capsys, "eval-term", "c3", "\\x.x x")
    assert code == 0
    assert isinstance(report["in_separator"], bool)


def test_check_sequent(capsys):
    assert run(capsys, "check", "b2", "x:1 |- x : 1")[0] == 0
    assert run(capsys, "check", "b2", "x:1 |- x : 0")[0] == 4


def test_tripos_small(capsys):
    code, _, report = run(capsys, "tripos", "b2", "--size-bound", "2")
    assert code == 0 and report["mode"] == "exhaustive"
    assert all(c["verdict"] == "pass" for c in report["checks"])


def test_model_reports_sizes_and_realizers(capsys):
    code, _, report = run(capsys, "model", "b2", "2", "--eq", "w1", "w1")
    assert code == 0
    assert report["stratum_sizes"] == [1, 3]
    assert set(report["core_realizers"]) >= {"rho", "j", "sigma"}
    assert report["values"][0]["value"] == "1"


def test_budget_exit(capsys):
    code, _, report = run(capsys, "model", "b2", "3", "--budget", "5")
    assert code == 5 and "error" in report


def test_eval_formula(capsys):
    code, _, report = run(capsys, "eval-formula", "b2", "2", "[x] |- x = x", "w2")
    assert code == 0 and report["value"] == "1"
    code, _, _ = run(capsys, "eval-formula", "b2", "2", "exists x. x in x")
    assert code == 4


def test_check_axioms_with_instances(capsys, tmp_path):
    inst = tmp_path / "inst.json"
    inst.write_text(json.dumps({"Sep": ["[x, z] |- x = z"]}))
    code, _, report = run(capsys, "check-axioms", "c3", "2", "--instances", str(inst),
                          "--axiom", "Emp", "--axiom", "Sep")
    assert code == 0
    assert [c["name"] for c in report["checks"]] == ["Emp", "Sep"]
    assert run(capsys, "check-axioms", "c3", "2", "--axiom", "Choice")[0] == 2


def test_report_file_matches_stdout(capsys, tmp_path):
    path = tmp_path / "r.json"
    code, out, _ = run(capsys, "--report", str(path), "validate", "m2")
    assert code == 0 and path.read_text() == out


def test_repeated_runs_are_byte_identical(capsys):
    argv = ("check-axioms", "b2", "2")
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert first == second
    assert "wall_time_s" not in first


def test_timings_flag(capsys):
    _, out, report = run(capsys, "--timings", "check-axioms", "b2", "2", "--axiom", "Emp")
    assert "wall_time_s" in report["checks"][0]


def test_labels_not_indices(capsys):
    _, _, report = run(capsys, "check-axioms", "c3", "2", "--axiom", "Ext")
    labels = {"0", "h", "1"}
    for check in report["checks"][0]["checks"]:
        if "realizer" in check:
            assert check["realizer"] in labels
