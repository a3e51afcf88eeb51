import json
import subprocess
import sys

import pytest

from conftest import FIXTURES
from tustrat.cli import main


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def report(capsys, *argv):
    code, out, _ = run(capsys, *argv)
    return code, json.loads(out)


def fx(name):
    return FIXTURES / f"{name}.json"


def test_transform_heirs(capsys):
    code, rep = report(capsys, "transform", "--proc", "maxmin", fx("heirs"))
    assert code == 0
    assert rep["command"][:3] == ["transform", "--proc", "maxmin"]
    assert rep["game"] == {
        "1": "0", "2": "0", "1+2": "1", "3": "-1/4", "1+3": "0", "2+3": "0", "1+2+3": "3",
    }
    assert rep["witness"]["3"] == "L,L,NR"
    assert len(rep["input"]["sha256"]) == 64


def test_transform_default_procedure_follows_orientation(capsys):
    _, rep = report(capsys, "transform", fx("subsidy"))
    assert rep["procedure"] == "minmax"
    assert rep["game"]["1+2+3"] == "290"


def test_transform_rejects_plain_game(capsys):
    code, out, err = run(capsys, "transform", fx("heirs-agreement"))
    assert code == 2 and out == "" and "plain game" in err


def test_shapley(capsys):
    _, rep = report(capsys, "shapley", fx("heirs-agreement"))
    assert rep["shapley"] == {"1": "7/6", "2": "7/6", "3": "2/3"}
    _, rep = report(capsys, "shapley", fx("subsidy"))
    assert rep["shapley"] == {"1": "70/3", "2": "250/3", "3": "550/3"}
    _, rep = report(capsys, "shapley", "--proc", "maxmax", fx("maxmax"))
    assert rep["game"] == {"1": "6", "2": "5", "1+2": "10"}


def test_core_subsidy(capsys):
    argv = ["core", "--witness", "--vertices", "--member", "90,100,100", fx("subsidy")]
    code, rep = report(capsys, *argv)
    assert code == 0 and rep["balanced"] is True
    assert rep["witness"] is not None
    assert ["90", "100", "100"] in rep["vertices"]
    assert rep["member"]["in_core"] is True


def test_core_plain_cost_game(capsys):
    code, rep = report(capsys, "core", "--witness", fx("subsidy-costs"))
    assert code == 0 and rep["balanced"] is True and "procedure" not in rep
    assert rep["orientation"] == "cost"
    _, check = report(capsys, "core", "--member=" + ",".join(rep["witness"]), fx("subsidy-costs"))
    assert check["member"]["in_core"] is True


def test_core_empty(capsys):
    code, rep = report(capsys, "core", "--witness", "--vertices", fx("coreempty"))
    assert code == 0
    assert rep["balanced"] is False and rep["witness"] is None and rep["vertices"] == []


@pytest.mark.parametrize("member", ["1,2", "1,x,3"])
def test_core_bad_member(capsys, member):
    code, _, err = run(capsys, "core", "--member", member, fx("subsidy"))
    assert code == 2 and "allocation" in err


def test_check_axioms_and_inheritance(capsys):
    code, rep = report(capsys, "check", fx("heirs"), "--axioms")
    assert code == 0 and all(rep["axioms"].values()) and rep["ok"]
    code, rep = report(capsys, "check", fx("nonconvex"), "--inheritance")
    assert code == 0
    assert rep["inheritance"]["convexity"] == {"hypothesis": True, "conclusion": False}
    code, rep = report(capsys, "check", fx("coreempty"), "--core-intersection", "40", "--seed", "3")
    assert code == 0 and rep["core_intersection"]["holds"]


def test_check_needs_a_mode(capsys):
    code, _, _ = run(capsys, "check", fx("heirs"))
    assert code == 2


def test_class_airport(capsys):
    code, rep = report(capsys, "class", fx("subsidy"), "airport")
    assert code == 0
    expected = {"holds": True, "pivot": "3", "costs": ["90", "190", "290"]}
    assert rep["sufficient_condition"] == expected
    assert rep["most_costly_player"] == "3"
    code, rep = report(capsys, "class", fx("suff"), "airport")
    assert code == 0 and rep["sufficient_condition"]["holds"] is False and rep["balanced"]


def test_class_simple(capsys):
    code, rep = report(capsys, "class", fx("parliament"), "simple")
    assert code == 0 and rep["veto_threat_player"] == "2" and rep["consistent"]


def test_class_wrong_family_exits_one(capsys):
    code, rep = report(capsys, "class", fx("heirs"), "airport")
    assert code == 1 and rep["is_airport_family"] is False
    code, rep = report(capsys, "class", fx("subsidy"), "simple")
    assert code == 1 and rep["is_simple_family"] is False


def test_gen_and_reuse(capsys, tmp_path):
    out = tmp_path / "a.json"
    code, rep = report(capsys, "gen", "--seed", "7", "--n", "3", "--class", "airport", "-o", out)
    assert code == 0 and rep["written"] == str(out)
    first = out.read_bytes()
    report(capsys, "gen", "--seed", "7", "--n", "3", "--class", "airport", "-o", out)
    assert out.read_bytes() == first
    code, rep = report(capsys, "check", out, "--axioms")
    assert code == 0


def test_gen_bad_parameters(capsys, tmp_path):
    code, _, err = run(capsys, "gen", "--seed", "1", "--n", "9", "-o", tmp_path / "x.json")
    assert code == 2 and "n must be" in err


@pytest.mark.parametrize(
    "content, needle",
    [
        ("{", "invalid JSON"),
        ('{"players": ["1"], "strategies": [["a"]], "games": {}}', "missing profile"),
    ],
)
def test_bad_input_exits_two(capsys, tmp_path, content, needle):
    path = tmp_path / "bad.json"
    path.write_text(content)
    code, out, err = run(capsys, "transform", path)
    assert code == 2 and out == "" and needle in err


def test_missing_file_exits_two(capsys, tmp_path):
    code, _, _ = run(capsys, "core", tmp_path / "nope.json")
    assert code == 2


def test_pretty_tables(capsys):
    code, out, _ = run(capsys, "transform", "--pretty", fx("coreempty"))
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "procedure: maxmin"
    assert "{1,2,3}" in lines[2] and lines[3].startswith("-")
    assert "witness" in lines[5]


def test_subprocess_is_byte_identical():
    argv = [sys.executable, "-m", "tustrat", "core", "--vertices", str(fx("nonconvex"))]
    a = subprocess.run(argv, capture_output=True, check=True).stdout
    b = subprocess.run(argv, capture_output=True, check=True).stdout
    assert a == b and json.loads(a)["balanced"] is True
