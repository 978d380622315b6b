"""
End-to-end tests for the setcolour command line.
"""

import json
import os
import sys

import pytest

# Add src to path
sys.path.append(os.path.join(os.path.dirname(__file__), '..', 'src'))

from cli.main import dispatch

HYPERGRAPH_TEXT = "parts 2 2 2\n0 0 0\n0 1 1\n1 0 1\n1 1 0\n"


def run(capsys, *argv):
    code = dispatch(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out)


@pytest.fixture
def two_missing(tmp_path, capsys):
    path = tmp_path / "two_missing.txt"
    code, _ = run(capsys, "construct", "two-missing", "--r", "5", "--out", str(path))
    assert code == 0
    return path


def test_construct_check(capsys):
    code, report = run(capsys, "construct", "two-missing", "--r", "5", "--check")
    assert code == 0
    assert report["outcome"] == "ok"
    assert report["payload"]["check"]["passed"] is True
    assert report["payload"]["description"] == "(5,3)-colouring of K_5"
    assert report["parameters"]["r"] == 5


def test_construct_missing_parameter(capsys):
    code, report = run(capsys, "construct", "two-missing")
    assert code == 2
    assert report["outcome"] == "usage-error"
    assert "--r" in report["payload"]["error"]


def test_cover_exact_and_constructive(two_missing, capsys):
    code, report = run(capsys, "cover", str(two_missing))
    assert code == 0
    assert report["payload"]["value"] == 2
    assert report["payload"]["verified"] is True

    code, report = run(capsys, "cover", str(two_missing), "--method", "construct")
    assert code == 0
    assert report["payload"]["value"] <= report["payload"]["bound"]
    assert "regime" in report["payload"]


def test_cover_missing_file(tmp_path, capsys):
    code, report = run(capsys, "cover", str(tmp_path / "nope.txt"))
    assert code == 2
    assert report["exit_code"] == 2


def test_cover_budget_exceeded(tmp_path, capsys):
    path = tmp_path / "random.json"
    code, _ = run(capsys, "--seed", "2", "construct", "random", "--n", "6", "--r", "3", "--k", "1",
                  "--json", "--out", str(path))
    assert code == 0
    code, report = run(capsys, "--budget", "1", "cover", str(path))
    assert code == 3
    assert report["outcome"] == "BudgetExceeded"
    assert report["payload"]["budget"] == 1


def test_verify_cover_report(two_missing, tmp_path, capsys):
    _, report = run(capsys, "cover", str(two_missing))
    certificate = tmp_path / "cover.json"
    certificate.write_text(json.dumps(report), encoding="utf-8")
    code, report = run(capsys, "verify", str(two_missing), str(certificate))
    assert code == 0
    assert report["outcome"] == "verified"


def test_verify_rejects_bad_certificate(two_missing, tmp_path, capsys):
    certificate = tmp_path / "cover.json"
    certificate.write_text(json.dumps({"kind": "tree-cover", "size": 0, "trees": []}), encoding="utf-8")
    code, report = run(capsys, "verify", str(two_missing), str(certificate))
    assert code == 1
    assert report["payload"]["problems"]


def test_partition(two_missing, capsys):
    code, report = run(capsys, "partition", str(two_missing), "--kind", "cycles")
    assert code == 0
    assert report["payload"]["verified"] is True


def test_critical(two_missing, capsys):
    code, report = run(capsys, "critical", str(two_missing), "--t", "2")
    assert code == 0
    assert report["payload"]["is_critical"] is True


def test_ramsey_search(capsys):
    code, report = run(capsys, "ramsey", "search", "--r", "3", "--k", "2", "--n", "5")
    assert code == 0
    assert report["outcome"] == "Unavoidable"

    code, report = run(capsys, "ramsey", "number", "--r", "3", "--k", "2")
    assert code == 0
    assert report["payload"]["exact"] == 5


def test_ramsey_search_needs_n(capsys):
    with pytest.raises(SystemExit) as exc:
        dispatch(["ramsey", "search", "--r", "3", "--k", "2"])
    assert exc.value.code == 2


def test_ramsey_bad_target(capsys):
    code, report = run(capsys, "ramsey", "bounds", "--r", "3", "--k", "2", "--target", "C4")
    assert code == 2


def test_ryser_check(tmp_path, capsys):
    path = tmp_path / "h.txt"
    path.write_text(HYPERGRAPH_TEXT, encoding="utf-8")
    code, report = run(capsys, "ryser", "check", str(path))
    assert code == 0
    assert report["payload"]["tau"] == 2
    assert report["payload"]["tree_cover"] == 2
    assert report["payload"]["nu"] == 1

    code, report = run(capsys, "ryser", "transversal", str(path))
    assert code == 0
    assert report["payload"]["size"] <= report["payload"]["bound"]


def test_text_format(two_missing, capsys):
    code = dispatch(["--format", "text", "cover", str(two_missing)])
    assert code == 0
    assert capsys.readouterr().out.startswith("cover: ok (exit 0)")


def test_accept_quick(capsys):
    code, report = run(capsys, "accept", "--quick", "--criteria", "7")
    assert code == 0
    assert report["outcome"] == "pass"
    assert report["payload"]["criteria"][0]["number"] == 7


def test_accept_unknown_criterion(capsys):
    code, report = run(capsys, "accept", "--criteria", "99")
    assert code == 2


def test_positional_cover_methods(two_missing, capsys):
    code, report = run(capsys, "cover", "exact", str(two_missing))
    assert code == 0
    assert report["parameters"]["method"] == "exact"
    assert report["payload"]["value"] == 2

    code, report = run(capsys, "cover", "construct", str(two_missing))
    assert code == 0
    assert report["parameters"]["method"] == "construct"
    assert "regime" in report["payload"]


def test_cover_method_given_twice(two_missing, capsys):
    code, report = run(capsys, "cover", "exact", str(two_missing), "--method", "construct")
    assert code == 2
    assert "given twice" in report["payload"]["error"]


@pytest.mark.parametrize("kind", ["paths", "cycles"])
def test_positional_partition_kinds(two_missing, capsys, kind):
    code, report = run(capsys, "partition", kind, str(two_missing))
    assert code == 0
    assert report["parameters"]["kind"] == kind
    assert report["payload"]["verified"] is True


def test_critical_t3_is_not_an_abbreviation(two_missing, capsys):
    code, report = run(capsys, "critical", str(two_missing), "--t", "3")
    assert code == 0
    assert report["payload"]["value"] == 2
    assert report["payload"]["is_critical"] is False


def test_global_flags_need_full_names(capsys):
    with pytest.raises(SystemExit) as exc:
        dispatch(["--thr", "2", "ramsey", "bounds", "--r", "3", "--k", "2"])
    assert exc.value.code == 2


def test_verify_rejects_negative_vertex(two_missing, tmp_path, capsys):
    certificate = tmp_path / "cover.json"
    bad = {"kind": "tree-cover", "size": 1, "trees": [{"colour": 0, "vertices": [-1, 0], "tree_edges": [[-1, 0]]}]}
    certificate.write_text(json.dumps(bad), encoding="utf-8")
    code, report = run(capsys, "verify", str(two_missing), str(certificate))
    assert code == 2
    assert "out of range" in report["payload"]["error"]


def test_ramsey_number_searches_to_classical_bound(capsys):
    code, report = run(capsys, "ramsey", "number", "--r", "2", "--k", "1")
    assert code == 0
    assert report["payload"]["exact"] == 6


def test_accept_ryser_checks_every_sample(capsys):
    code, report = run(capsys, "accept", "--quick", "--criteria", "10")
    assert code == 0
    assert report["payload"]["criteria"][0]["status"] == "pass"
    assert report["payload"]["criteria"][0]["detail"].startswith("20 hypergraphs")
