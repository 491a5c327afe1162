"""
Tests for the command-line front end
------------------------------------
Each subcommand in JSON and CSV form, and the exit codes.
"""

import json

import pytest

from orthotl.cli import run

pytestmark = pytest.mark.integration


def _json(capsys):
    return json.loads(capsys.readouterr().out)


def test_qint(capsys):
    assert run(["qint", "2"]) == 0
    assert _json(capsys) == {"num": {"1": [1, 1], "-1": [1, 1]}, "den": {"0": [1, 1]}}


def test_basis_of_degree_two(capsys):
    assert run(["basis", "--n", "2", "--shape", "1,1", "--kind", "omega"]) == 0
    (entry,) = _json(capsys)
    assert entry["one_factor"] == [1, -1]
    terms = {tuple(t["signs"]): t["coeff"] for t in entry["vector"]["terms"]}
    assert terms == {
        (1, -1): {"num": {"0": [1, 1]}, "den": {"0": [1, 1]}},
        (-1, 1): {"num": {"1": [-1, 1]}, "den": {"0": [1, 1]}},
    }


def test_transition_csv(capsys):
    assert run(["transition", "--shape", "2,1", "--which", "Pprime", "--format", "csv"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0] == "alpha,beta,entry"
    assert len(lines) == 4


def test_pipp_output(capsys):
    assert run(["transition", "--shape", "2,1", "--which", "pipp"]) == 0
    rows = _json(capsys)
    assert {tuple(r["alpha"]) for r in rows} == {(1, -1, 1), (1, 1, -1)}


def test_tl_matrix(capsys):
    assert run(["tl-matrix", "--n", "2", "--gen", "1"]) == 0
    out = _json(capsys)
    assert out["basis"] == [[1, 1], [1, -1], [-1, 1], [-1, -1]]
    assert out["entries"][2][1] == {"num": {"0": [1, 1]}, "den": {"0": [1, 1]}}


def test_bijection(capsys):
    assert run(["bijection", "--shape", "2,2"]) == 0
    rows = _json(capsys)
    assert [r["walk"] for r in rows] == ["VDVD", "VVDD"]
    assert rows[1]["tableau"] == [[1, 2], [3, 4]]
    assert rows[1]["link"] == [4, 3, 2, 1]


def test_verify_passes(capsys):
    assert run(["verify", "--suite", "orthogonality", "--n", "4"]) == 0
    report = _json(capsys)
    assert report["passed"] is True
    assert report["failures"] == []
    assert report["checks_run"] > 0


def test_verify_plus_sign_fails_cellular(capsys):
    assert run(["verify", "--suite", "cellular", "--shape", "2,1", "--delta-sign", "plus"]) == 1
    report = _json(capsys)
    assert report["passed"] is False
    assert report["failures"][0]["check"] == "e_i phi = phi e_i"


def test_verify_specialized(capsys):
    assert run(["verify", "--suite", "inverse", "--n", "4", "--specialize", "1"]) == 0
    assert _json(capsys)["specialization"] == "1"


def test_output_file(tmp_path, capsys):
    out = tmp_path / "q.json"
    assert run(["qint", "3", "--out", str(out)]) == 0
    assert json.loads(out.read_text())["num"] == {"2": [1, 1], "0": [1, 1], "-2": [1, 1]}


@pytest.mark.parametrize(
    "argv",
    [
        ["basis", "--n", "3", "--shape", "2,2"],
        ["transition", "--which", "P"],
        ["tl-matrix", "--n", "3", "--gen", "3"],
        ["verify", "--suite", "nope"],
        ["verify", "--suite", "orthogonality", "--n", "0"],
        ["verify", "--suite", "all", "--n", "-2"],
        ["qint"],
        ["bijection", "--shape", "1,2"],
    ],
)
def test_usage_errors(argv):
    assert run(argv) == 2
