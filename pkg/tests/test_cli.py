import json
import os
import subprocess
import sys

import pytest

PKG_ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))


def run_cli(args, cwd):
    """Fresh process per invocation (exercises cross-run determinism)."""
    proc = subprocess.run([sys.executable, "-m", "brownalg.cli", *args],
                          capture_output=True, text=True, cwd=cwd)
    return proc


def test_build_grade_orbit_export_report(tmp_path):
    out = str(tmp_path / "art")
    r = run_cli(["build", "B", "--out", out], tmp_path)
    assert r.returncode == 0, r.stderr
    assert os.path.exists(os.path.join(out, "model_B.algebra.json"))
    assert os.path.exists(os.path.join(out, "model_B.grading.json"))

    r = run_cli(["grade", "B", "--out", out, "--format", "json"], tmp_path)
    assert r.returncode == 0
    doc = json.loads(r.stdout)
    assert doc["support_size"] == 56 and doc["fine_dim1"]

    r = run_cli(["orbit", '{"alpha":[1,0,0],"a":[0,0,0]}'], tmp_path)
    assert r.returncode == 0 and "O1" in r.stdout

    r = run_cli(["orbit", '{"alpha":[2,2,2],"a":[0,0,0]}', "--format", "json"],
                tmp_path)
    doc = json.loads(r.stdout)
    assert doc["orbit"] == "O27" and doc["norm"] == "8" and doc["rank"] == 27

    r = run_cli(["export", "tables", "--out", out], tmp_path)
    assert r.returncode == 0
    with open(os.path.join(out, "cocycle_tables.json")) as fh:
        tables = json.load(fh)
    assert len(tables["gamma"]) == 8 and len(tables["sigma11"]) == 4

    r = run_cli(["report", "--out", out], tmp_path)
    assert r.returncode == 0
    with open(os.path.join(out, "report.json")) as fh:
        rep = json.load(fh)
    assert rep["all_passed"]


def test_lie_sampled_artifact(tmp_path):
    out = str(tmp_path / "art")
    r = run_cli(["lie", "der", "--out", out, "--jacobi", "sampled:300"], tmp_path)
    assert r.returncode == 0, r.stderr
    with open(os.path.join(out, "lie_der_B.json")) as fh:
        doc = json.load(fh)
    assert doc["dim"] == 78
    assert doc["certificates"]["killing_rank"] == 78
    assert doc["certificates"]["jacobi"]["passed"]


def test_bad_inputs_exit_2(tmp_path):
    r = run_cli(["orbit", "not json"], tmp_path)
    assert r.returncode == 2
    r = run_cli(["orbit", '{"alpha":[0.5,0,0],"a":[0,0,0]}'], tmp_path)
    assert r.returncode == 2
    r = run_cli(["lie", "der", "--jacobi", "bogus"], tmp_path)
    assert r.returncode == 2


def test_verify_model_b_exit_zero(tmp_path):
    out = str(tmp_path / "art")
    r = run_cli(["verify", "B", "--out", out, "--trials", "20"], tmp_path)
    assert r.returncode == 0, r.stderr
    with open(os.path.join(out, "verify_B.json")) as fh:
        doc = json.load(fh)
    assert doc["passed"]
