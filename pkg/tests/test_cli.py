import json
import subprocess
import sys

import pytest

from mink4gauss.cli import fmt_float, run_cli


def _run(capsys, *argv):
    code = run_cli(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_eval_anchor(capsys):
    code, out, _ = _run(capsys, "eval", "--axis", "spacelike", "--profile", "linear:0.5,0", "--k", "1", "--at", "2,0,0")
    assert code == 0
    rep = json.loads(out)
    assert rep["lkN_closed"] == pytest.approx([1 / 12, 0, 0, 0], abs=1e-12)
    assert rep["max_path_diff"] <= 1e-8


def test_classify_const(capsys):
    code, out, _ = _run(capsys, "classify", "--axis", "spacelike", "--profile", "const:1", "--k", "1")
    assert code == 0
    assert json.loads(out)["kind"] == "Harmonic"


def test_family_flat_s(capsys):
    code, out, _ = _run(capsys, "family", "--name", "flat-s", "--params", "1", "--k", "1")
    assert code == 0
    rep = json.loads(out)
    assert rep["checks"]["corollary_k1"]["pass"]
    assert rep["pass"]


def test_family_firstkind_records_comparison(capsys):
    code, out, _ = _run(capsys, "family", "--name", "firstkind-s", "--params", "1,0,0", "--k", "1")
    rep = json.loads(out)
    assert code == 0
    assert rep["checks"]["ode_residual_k1"]["pass"]
    assert "m_rel_gap" in rep["recorded"]["theorem_comparison"]


def test_usage_error_exit_2(capsys):
    code, out, err = _run(capsys, "eval", "--axis", "spacelike")
    assert code == 2 and out == ""
    assert json.loads(err)["error"] == "usage"
    assert _run(capsys, "eval", "--axis", "spacelike", "--profile", "linear:0.5,0", "--at", "a,b")[0] == 2


def test_domain_error_exit_3(capsys):
    code, _, err = _run(capsys, "eval", "--axis", "timelike", "--profile", "const:1", "--k", "1", "--at", "1,0,0")
    assert code == 3
    assert json.loads(err)["exit"] == 3
    assert _run(capsys, "family", "--name", "flat-t", "--params", "0.5")[0] == 3


def test_verify_failure_exit_1(capsys):
    code, out, _ = _run(capsys, "verify", "--axis", "spacelike", "--samples", "5", "--tol", "1e-300")
    assert code == 1
    assert json.loads(out)["pass"] is False


def test_verify_deterministic(capsys):
    argv = ("verify", "--axis", "lightlike", "--samples", "20", "--seed", "7")
    a = _run(capsys, *argv)
    b = _run(capsys, *argv)
    assert a[0] == 0
    assert a[1] == b[1]


def test_thread_count_does_not_change_output(capsys, monkeypatch):
    argv = ("scan", "--axis", "timelike", "--profile", "poly:0,2,0.1", "--n", "12", "--format", "json")
    monkeypatch.setenv("MINK4_THREADS", "0")
    seq = _run(capsys, *argv)[1]
    monkeypatch.setenv("MINK4_THREADS", "4")
    par = _run(capsys, *argv)[1]
    monkeypatch.delenv("MINK4_THREADS")
    default = _run(capsys, *argv)[1]
    assert seq == par == default


def test_scan_csv(capsys):
    code, out, _ = _run(capsys, "scan", "--axis", "spacelike", "--profile", "tanh:0.6", "--n", "3", "--k", "1")
    lines = out.strip().split("\n")
    assert code == 0
    assert lines[0] == "s,t,w,k,norm,m,n,residual"
    assert len(lines) == 4


def test_out_file(capsys, tmp_path):
    dest = tmp_path / "r.json"
    code, out, _ = _run(capsys, "classify", "--axis", "spacelike", "--profile", "linear:0.5,0", "--k", "2", "--out", str(dest))
    assert code == 0 and out == ""
    assert json.loads(dest.read_text())["kind"] == "Harmonic"


def test_fmt_float():
    assert fmt_float(2.0) == "2.0"
    assert fmt_float(float("nan")) == "null"
    assert float(fmt_float(0.1 + 0.2)) == 0.1 + 0.2


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "mink4gauss", "classify", "--axis", "spacelike",
                        "--profile", "const:1", "--k", "1"], capture_output=True, text=True, check=False)
    assert r.returncode == 0
    assert json.loads(r.stdout)["kind"] == "Harmonic"
