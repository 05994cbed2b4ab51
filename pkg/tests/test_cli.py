import json
import subprocess
import sys

import pytest

from satake import cli
from satake import multiplicities as mult
from satake import root_datum as rd


def run_json(*argv):
    status, text = cli.run(list(argv))
    return status, json.loads(text)


def write_spec(tmp_path, spec, name="spec.json"):
    p = tmp_path / name
    p.write_text(json.dumps(spec))
    return str(p)


def test_mult_example():
    status, out = run_json("mult", "--type", "A2-sc", "--lambda", "1,1", "--nu", "0,0")
    assert status == 0
    assert out["multiplicity"] == 2
    assert out["basis"] == "fundamental_coweight"


def test_mult_table():
    status, out = run_json("mult", "--type", "A2-ad", "--lambda", "1,1")
    assert status == 0 and out["dimension"] == 8
    assert {"nu": [0, 0], "multiplicity": 2} in out["entries"]


def test_dual_round_trip(tmp_path):
    status, first = cli.run(["dual", "--type", "A1-sc"])
    assert status == 0
    path = tmp_path / "dual.json"
    path.write_text(first)
    status, second = cli.run(["dual", "--custom-spec", str(path)])
    assert status == 0
    original = cli.dumps(rd.datum_to_spec(rd.build_root_datum("A1-sc")))
    assert second == original


def test_check_semismall_example():
    status, out = run_json("check", "--suite", "semismall", "--type", "A1-sc", "--bound", "6")
    assert status == 0
    assert out["passed"] and out["violations"] == []


def test_check_failure_exit_two(monkeypatch):
    real = mult.weyl_dimension
    monkeypatch.setattr(mult, "weyl_dimension", lambda d, lam: real(d, lam) + (1 if any(lam) else 0))
    status, out = run_json("check", "--suite", "oracle", "--type", "A1-ad", "--bound", "2")
    assert status == 2
    assert not out["passed"] and out["violations"]
    assert "Weyl dimension" in out["violations"][0]


def test_errors_exit_one(tmp_path):
    bad = write_spec(tmp_path, {"custom": {"roots": [[1], [-1]], "coroots": [[3], [-3]], "simple": [0]}})
    status, out = run_json("pi1", "--custom-spec", bad)
    assert status == 1
    assert out["error"]["type"] == "DatumError" and "!= 2" in out["error"]["message"]
    for argv in (["mult", "--type", "A2-sc"], ["frobnicate", "--type", "A1-sc"], ["pi1"],
                 ["mult", "--type", "A2-sc", "--lambda", "x,y"], ["check", "--type", "A1-sc", "--suite", "nope"]):
        status, out = run_json(*argv)
        assert status == 1 and set(out["error"]) == {"type", "message"}


def test_non_lattice_coweight_reported():
    # (1,0) in fundamental coweights is not in X_* of B2-sc
    status, out = run_json("tensor", "--type", "B2-sc", "--lambda", "1,0", "--mu", "0,1")
    assert status == 1
    status, out = run_json("tensor", "--type", "B2-ad", "--lambda", "1,0", "--mu", "0,1")
    assert status == 0
    assert {"eta": [1, 1], "multiplicity": 1} in out["entries"]


def test_basis_flag():
    _, a = run_json("mult", "--type", "A2-sc", "--lambda", "1,1", "--basis", "stored")
    _, b = run_json("mult", "--type", "A2-sc", "--lambda", "1,1")
    assert a["basis"] == "stored" and b["basis"] == "fundamental_coweight"
    assert a["dimension"] == b["dimension"] == 8
    status, _ = run_json("mult", "--type", "GL2", "--lambda", "1,0", "--basis", "fundamental")
    assert status == 1


def test_gl_uses_stored_basis():
    status, out = run_json("tensor", "--type", "GL3", "--lambda", "1,0,0", "--mu", "1,0,0")
    assert status == 0 and out["basis"] == "stored"
    assert [e["eta"] for e in out["entries"]] == [[1, 1, 0], [2, 0, 0]]


def test_other_verbs():
    status, out = run_json("pi1", "--type", "A3-ad")
    assert status == 0 and out["pi1"] == rd.FiniteAbelianGroup((4,)).to_json()
    status, out = run_json("isogeny", "--type", "GL3")
    assert status == 0 and out["central_torus_rank"] == 1
    assert out["dual_isogeny_kernel"] == rd.FiniteAbelianGroup((3,)).to_json()
    status, out = run_json("poset", "--type", "A1-ad", "--height-bound", "3")
    assert out["edges"] == [[[0], [2]], [[1], [3]]]
    status, out = run_json("dims", "--type", "A2-sc", "--lambda", "1,1", "--nu", "0,0")
    assert out["intersections"] == [{"nu": [0, 0], "s_dim": 2, "t_dim": 2}]
    assert out["orbit_dim"] == 4 and out["parity"] == 0
    status, out = run_json("weylmod", "--type", "B2-ad", "--lambda", "0,1", "--kind", "schur")
    assert status == 0 and out["kind"] == "schur"
    assert sum(e["rank"] for e in out["ranks"]) in (4, 5)


def test_csv_and_text_formats():
    status, text = cli.run(["mult", "--type", "A2-sc", "--lambda", "1,1", "--format", "csv"])
    assert status == 0
    lines = text.splitlines()
    assert lines[0] == "nu,multiplicity" and "0 0,2" in lines
    status, text = cli.run(["tensor", "--type", "A1-ad", "--lambda", "1", "--mu", "1", "--format", "text"])
    assert status == 0 and "datum: \"A1-ad\"" in text
    status, text = cli.run(["pi1", "--type", "A1-ad", "--format", "csv"])
    assert status == 1


COMMANDS = [
    ["dual", "--type", "B3-sc"],
    ["pi1", "--type", "D4-ad"],
    ["poset", "--type", "G2-sc", "--height-bound", "12"],
    ["dims", "--type", "B2-ad", "--lambda", "1,1"],
    ["mult", "--type", "G2-sc", "--lambda", "1,1"],
    ["tensor", "--type", "A2-ad", "--lambda", "2,1", "--mu", "1,1"],
    ["isogeny", "--type", "C3-sc"],
    ["weylmod", "--type", "A3-ad", "--lambda", "1,0,1"],
    ["check", "--suite", "tensor", "--type", "B2-sc", "--count", "10", "--seed", "7"],
]


@pytest.mark.parametrize("argv", COMMANDS, ids=lambda a: a[0])
def test_determinism(argv):
    outputs = {cli.run(argv) for _ in range(3)}
    assert len(outputs) == 1
    status, _ = outputs.pop()
    assert status == 0


@pytest.mark.parametrize("suite", ["tensor", "iota", "associativity", "oracle"])
def test_jobs_do_not_change_output(suite):
    base = ["check", "--suite", suite, "--type", "A2-sc", "--bound", "6"]
    assert cli.run(base + ["--jobs", "1"]) == cli.run(base + ["--jobs", "4"])


def test_same_seed_same_sample():
    a = cli.run(["check", "--suite", "tensor", "--type", "A2-sc", "--count", "5", "--seed", "1"])
    b = cli.run(["check", "--suite", "tensor", "--type", "A2-sc", "--count", "5", "--seed", "1"])
    assert a == b


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "satake", "pi1", "--type", "A2-ad"],
                         capture_output=True, text=True, check=False)
    assert out.returncode == 0
    assert json.loads(out.stdout)["pi1"] == rd.FiniteAbelianGroup((3,)).to_json()
