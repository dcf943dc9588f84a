"""Golden outputs, exit codes and serialization of the command-line front end."""

import json

import pytest

from cycloschur.cli import EXIT_FAIL, EXIT_OK, EXIT_USAGE, main
from cycloschur.combi import from_json


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


DIMS_22 = """\
lambda      dim  std
[[2],[]]    10   1
[[1,1],[]]  6    1
[[1],[1]]   8    2
[[],[2]]    3    1
[[],[1,1]]  1    1
sum |Std|^2 = 8, r^n n! = 8
"""


def test_dims_golden(capsys):
    code, out, _ = run(capsys, "dims", "--n", "2", "--r", "2", "--m", "2,2")
    assert code == EXIT_OK
    assert out == DIMS_22


def test_dims_trivial_and_gl3(capsys):
    code, out, _ = run(capsys, "dims", "--n", "0", "--r", "1")
    assert code == EXIT_OK
    assert out.splitlines()[1].split() == ["[[]]", "1", "1"]
    _, out, _ = run(capsys, "dims", "--n", "3", "--r", "1", "--m", "3")
    row = [ln.split() for ln in out.splitlines() if ln.startswith("[[2,1]]")]
    assert row == [["[[2,1]]", "8", "2"]]


def test_dims_json_and_csv(capsys):
    _, out, _ = run(capsys, "dims", "--n", "2", "--r", "2", "--m", "2,2", "--format", "json")
    data = json.loads(out)
    assert data["sum_std_squared"] == data["r_n_factorial"] == 8
    assert [from_json(row["lambda"]) for row in data["rows"]][2] == ((1,), (1,))
    _, out, _ = run(capsys, "dims", "--n", "2", "--r", "2", "--m", "2,2", "--format", "csv")
    lines = out.splitlines()
    assert lines[0] == "lambda,dim,std" and len(lines) == 6


def test_branch_examples(capsys):
    code, out, _ = run(capsys, "branch", "res", "--la", "[[2],[1]]")
    assert code == EXIT_OK
    assert out.splitlines()[1:] == ["1. (1,2,1)  [[1],[1]]  dim 10", "2. (1,1,2)  [[2],[]]  dim 15"]
    _, out, _ = run(capsys, "branch", "ind", "--la", "[[],[1]]", "--m", "2,2")
    assert len(out.splitlines()) == 4
    _, out, _ = run(capsys, "branch", "res", "--la", "[[2],[1]]", "--i", "1", "--e", "2",
                    "--charge", "0,0")
    assert out.splitlines()[1:] == ["1. (1,2,1)  [[1],[1]]  dim 10  res 1"]


def test_branch_json_roundtrip(capsys):
    _, out, _ = run(capsys, "branch", "ind", "--la", "[[],[1]]", "--m", "2,2", "--format", "json")
    data = json.loads(out)
    assert data["direction"] == "ind" and data["bounds"] == [2, 2]
    shapes = [from_json(f["shape"]) for f in data["factors"]]
    assert shapes == [((), (1, 1)), ((), (2,)), ((1,), (1,))]


def test_branch_warns_on_small_bounds(capsys):
    code, _, err = run(capsys, "branch", "ind", "--la", "[[1],[1]]", "--m", "2,2")
    assert code == EXIT_OK and "warning" in err


def test_blocks_example(capsys):
    code, out, _ = run(capsys, "blocks", "--n", "2", "--r", "2", "--e", "2", "--charge", "0,0")
    assert code == EXIT_OK
    assert out.splitlines()[0] == "2 blocks"
    _, out, _ = run(capsys, "blocks", "--n", "2", "--r", "2", "--e", "2", "--charge", "0,0",
                    "--format", "json")
    assert {k: len(v) for k, v in json.loads(out).items()} == {"1,1": 4, "2,0": 1}


def test_fock_act_vacuum(capsys):
    code, out, _ = run(capsys, "fock", "act", "--op", "f", "--i", "0", "--e", "2",
                       "--charge", "0,0", "--vector", "[[],[]]")
    assert code == EXIT_OK
    assert out == "1|[[],[1]]> + 1|[[1],[]]>\n"


def test_fock_matrix_formats(capsys):
    args = ["fock", "matrix", "--op", "f", "--n", "1", "--r", "2", "--i", "1", "--e", "2",
            "--charge", "0,0"]
    _, out, _ = run(capsys, *args, "--format", "json")
    trip = json.loads(out)
    assert trip and all(t["value"] == 1 for t in trip)
    _, out, _ = run(capsys, *args, "--format", "csv")
    assert out.splitlines()[0] == "row,col,value"
    assert len(out.splitlines()) == len(trip) + 1


def test_fock_sweeps_pass(capsys):
    code, out, _ = run(capsys, "fock", "commutator", "--n", "3", "--r", "2", "--e", "3",
                       "--charge", "0,1")
    assert (code, out) == (EXIT_OK, "commutator: PASS\n")
    code, out, _ = run(capsys, "fock", "categorify", "--n", "3", "--r", "2", "--e", "2")
    assert (code, out) == (EXIT_OK, "categorification: PASS\n")


def test_verify_presentation_pass_and_fail(capsys):
    code, out, _ = run(capsys, "verify", "presentation", "--n", "2", "--r", "2", "--m", "3,3")
    assert code == EXIT_OK and out.endswith("0 failures, 0 vacuous\n")
    code, out, _ = run(capsys, "verify", "presentation", "--n", "2", "--r", "2", "--m", "3,3",
                       "--perturb", "drop-e-prefactor", "--format", "json")
    assert code == EXIT_FAIL
    data = json.loads(out)
    assert data["summary"]["failures"] > 0
    assert any(r["status"] == "FAIL" and "witness" in r for r in data["reports"])


def test_verify_small_suites(capsys):
    for argv in (["verify", "theta", "--n", "2", "--r", "2", "--m", "2,2"],
                 ["verify", "iota", "--n", "1", "--r", "2"],
                 ["verify", "dictionary", "--n", "2", "--r", "2"],
                 ["verify", "dimensions", "--n", "3", "--r", "2"],
                 ["verify", "associativity", "--n", "2", "--r", "2", "--samples", "10"]):
        code, out, _ = run(capsys, *argv)
        assert code == EXIT_OK, (argv, out)


@pytest.mark.parametrize("argv", [
    ["branch", "res", "--la", "[[2],["],
    ["branch", "res", "--la", "[[],[]]"],
    ["dims", "--n", "2", "--r", "2", "--m", "2"],
    ["dims", "--n", "x"],
    ["blocks", "--n", "2", "--r", "2"],
    ["blocks", "--n", "2", "--r", "2", "--e", "2", "--charge", "0"],
    ["blocks", "--n", "2", "--r", "1", "--e", "1"],
    ["fock", "act", "--op", "f", "--e", "2", "--vector", "[[]]"],
    ["verify", "presentation", "--n", "2", "--r", "2", "--format", "csv"],
    ["nonsense"],
])
def test_usage_errors_exit_2(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == EXIT_USAGE


def test_out_file(tmp_path, capsys):
    target = tmp_path / "dims.txt"
    code, out, _ = run(capsys, "dims", "--n", "2", "--r", "2", "--m", "2,2", "--out", str(target))
    assert code == EXIT_OK and out == ""
    assert target.read_text() == DIMS_22


def test_workers_env_fallback_is_deterministic(monkeypatch, capsys):
    argv = ["verify", "presentation", "--n", "2", "--r", "1", "--m", "3", "--show", "all",
            "--format", "json"]
    _, serial, _ = run(capsys, *argv)
    monkeypatch.setenv("CYCLOSCHUR_WORKERS", "2")
    _, parallel, _ = run(capsys, *argv)
    assert serial == parallel
