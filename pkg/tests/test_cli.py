import json
import subprocess
import sys

import pytest

from tiealg.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_nf(capsys):
    code, out, _ = run(capsys, "nf", "--n", "2", "T1 T1")
    assert code == 0
    assert out == "1 + ((1-u)/u)*E1 + ((u-1)/u)*T1 E1\n"


def test_nf_json(capsys):
    code, out, _ = run(capsys, "nf", "--n", "2", "--format", "json", "T1^-1")
    data = json.loads(out)
    assert code == 0 and data["element"] == "T1 + (1-u)*E1 + (u-1)*T1 E1"
    assert data["schema"] == "tiealg/1"


@pytest.mark.parametrize("argv", [
    ["nf", "--n", "3", "E9"],
    ["nf", "--n", "3", "T1 +"],
    ["nf", "--n", "1", "1"],
    ["check", "--n", "3", "--suite", "bogus"],
    ["diagram", "--n", "3", "T1 + E1"],
    ["repr", "--n", "3", "--which", "bip:[2],[2]"],
    ["repr", "--n", "3", "--which", "what"],
    ["frobnicate"],
])
def test_input_errors(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert out == ""


def test_syntax_error_points_at_position(capsys):
    code, _, err = run(capsys, "nf", "--n", "3", "T1 X2")
    assert code == 2 and "position" in err


@pytest.mark.parametrize("argv", [["nf", "--n", "5", "T1"], ["dim", "--n", "5"],
                                  ["repr", "--n", "4", "--which", "list"],
                                  ["structure", "--n", "4"]])
def test_unsupported(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 3


def test_budget(capsys, monkeypatch):
    monkeypatch.setenv("TIEALG_BUDGET", "3")
    code, _, err = run(capsys, "nf", "--n", "3", "T1 T2 T1 T2")
    assert code == 3 and err


def test_dim(capsys):
    assert run(capsys, "dim", "--n", "3")[1] == "30 exact\n"
    assert run(capsys, "dim", "--n", "4")[1] == "216 lower-bound\n"
    data = json.loads(run(capsys, "dim", "--n", "4", "--format", "json")[1])
    assert data["certificate"] == "lower-bound" and data["upper_bound"] == 360


def test_check(capsys):
    code, out, _ = run(capsys, "check", "--n", "3")
    assert code == 0
    assert out.splitlines()[-1] == "60/60 identities hold (n=3, suite=all)"


def test_check_failure_exit(capsys, monkeypatch):
    from tiealg import relations

    monkeypatch.setattr(relations, "identities",
                        lambda n, suite: list(relations.tie_slide_as_printed(n)))
    code, out, _ = run(capsys, "check", "--n", "3")
    assert code == 4 and "FAIL" in out


def test_repr(capsys):
    code, out, _ = run(capsys, "repr", "--n", "3")
    data = json.loads(out)
    assert code == 0 and data["dims"] == [1, 1, 2, 1, 1, 2, 3, 3]
    data = json.loads(run(capsys, "repr", "--n", "2", "--which", "plusminus:[1]")[1])
    assert [r["T"] for r in data["reps"]] == [[[["1"]]], [[["-1"]]]]
    data = json.loads(run(capsys, "repr", "--n", "3", "--which", "bip:[2],[1]")[1])
    assert data["dims"] == [3]
    data = json.loads(run(capsys, "repr", "--n", "3", "--which", "phi0:[2,1]")[1])
    assert data["dims"] == [2]


def test_diagram(capsys):
    code, out, _ = run(capsys, "diagram", "--n", "3", "T1 E2 T1^-1")
    assert code == 0 and out.splitlines()[2] == "|   :- -:"
    out = run(capsys, "diagram", "--n", "2", "--format", "svg", "E1")[1]
    assert 'class="tie"' in out
    data = json.loads(run(capsys, "diagram", "--n", "2", "--format", "json", "T1")[1])
    assert data["rows"] == [{"kind": "crossing", "i": 1, "sign": "+"}]


def test_certify(capsys):
    code, out, _ = run(capsys, "certify")
    assert code == 0
    assert "rank 30" in out and "psi-only rank 24" in out
    data = json.loads(run(capsys, "certify", "--format", "json")[1])
    assert data["rank"] == 30 and len(data["witness_columns"]) == 30


def test_structure(capsys):
    data = json.loads(run(capsys, "structure", "--n", "2")[1])
    assert len(data["basis"]) == 4 and len(data["table"]) == 4


def test_out_file(capsys, tmp_path):
    target = tmp_path / "dim.txt"
    code, out, _ = run(capsys, "--out", str(target), "dim", "--n", "2")
    assert code == 0 and out == ""
    assert target.read_text() == "4 exact\n"
    target2 = tmp_path / "nf.txt"
    run(capsys, "nf", "--n", "2", "--out", str(target2), "E1 E1")
    assert target2.read_text() == "E1\n"


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "tiealg", "dim", "--n", "2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "4 exact\n"
    proc = subprocess.run([sys.executable, "-m", "tiealg", "nf", "--n", "2", "E3"],
                          capture_output=True, text=True)
    assert proc.returncode == 2
