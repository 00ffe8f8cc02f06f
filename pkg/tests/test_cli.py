import io
import json
import subprocess
import sys

import pytest

from quandlekit.cli import dispatch
from quandlekit.io import dump_json
from quandlekit.reproduce import phi_s4, theta_r3
from quandlekit import Cochain


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = dispatch(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def files(tmp_path):
    run("make-quandle", "dihedral", "3", "-o", str(tmp_path / "R3.json"))
    run("make-quandle", "named", "S4", "-o", str(tmp_path / "S4.json"))
    (tmp_path / "phi_s4.json").write_text(dump_json(phi_s4().to_json()))
    (tmp_path / "theta.json").write_text(dump_json(theta_r3().to_json()))
    bad = theta_r3() + Cochain.chi(theta_r3().quandle, (0, 1, 2), 3)
    (tmp_path / "theta_bad.json").write_text(dump_json(bad.to_json()))
    (tmp_path / "bad.json").write_text(json.dumps({"label": "x", "size": 2,
                                                   "table": [[1, 0], [0, 1]]}))
    (tmp_path / "chain.json").write_text(json.dumps(
        {"level": 2, "terms": [[[0, 1], 1], [[1, 2], 1], [[1, 0], -1]]}))
    (tmp_path / "tp.json").write_text(json.dumps({"triple_points": [[0, 1, 0, 1]]}))
    return tmp_path


def test_col(files):
    code, out, _ = run("col", "--pd", "3_1", "--quandle", str(files / "R3.json"))
    assert code == 0 and out.strip() == "9"


def test_homology(files):
    code, out, _ = run("homology", "--quandle", str(files / "R3.json"), "--theory", "quandle",
                       "--level", "2", "--coeff", "Z")
    assert code == 0 and out.strip() == "0"
    code, out, _ = run("homology", "compute", "--quandle", "S4", "--level", "2", "--coeff",
                       "Z2", "--cohomology")
    assert out.strip() == "Z_2"


def test_verify_bad_quandle(files):
    code, out, _ = run("verify-quandle", str(files / "bad.json"))
    assert code == 2 and "axiom I" in out and "(0,)" in out
    code, out, _ = run("quandle", "verify", str(files / "R3.json"))
    assert code == 0


def test_unknown_command():
    code, _, err = run("frobnicate")
    assert code == 64 and "usage" in err
    assert run()[0] == 64
    assert run("col", "--pd")[0] == 64


def test_input_errors(files):
    code, _, err = run("col", "--pd", "missing.pd", "--quandle", "R3")
    assert code == 2 and "error" in err
    code, _, _ = run("phi", "--pd", "3_1", "--quandle", "R3", "--cocycle",
                     str(files / "phi_s4.json"))
    assert code == 2


def test_infeasible(monkeypatch):
    monkeypatch.setenv("QW_MAX_TUPLES", "10")
    code, _, err = run("homology", "--quandle", "R3", "--level", "3")
    assert code == 3 and "QW_MAX_TUPLES" in err


def test_phi_and_phit(files):
    code, out, _ = run("invariant", "phi", "--pd", "3_1", "--quandle", str(files / "S4.json"),
                       "--cocycle", str(files / "phi_s4.json"))
    assert code == 0 and out.strip() == "4*[0] + 12*[1]"
    run("extend", "--digits", "3", "2", "T+1", "-o", str(files / "ext.json"))
    code, out, _ = run("phit", "--pd", "3_1", "--quandle", str(files / "R3.json"), "--coeff",
                       "R3", "--cocycle", str(files / "ext.json"))
    assert code == 0 and out.strip() == "9*[0]"


def test_extend(files):
    code, out, _ = run("extend", "--digits", "3", "2", "T+1")
    assert out.strip() == "chi(0,2) + 2 chi(1,0) + chi(1,2) + 2 chi(2,0)"
    run("extend", "--digits", "3", "2", "T+1", "-o", str(files / "ext.json"))
    code, out, _ = run("quandle", "extend", "--base", str(files / "R3.json"), "--fiber", "R3",
                       "--cocycle", str(files / "ext.json"), "--json")
    assert code == 0
    assert json.loads(out)["result"]["size"] == 9
    assert run("extend", "--base", "R3")[0] == 64


def test_check_cocycle(files):
    code, out, _ = run("check-cocycle", str(files / "theta.json"))
    assert code == 0 and "cocycle" in out and "not a coboundary" in out
    code, out, _ = run("homology", "check-cocycle", str(files / "theta_bad.json"), "--json")
    doc = json.loads(out)
    assert doc["result"]["cocycle"] is False and doc["result"]["witness"] == [0, 1, 0, 2]


def test_surface_and_cycles(files):
    code, out, _ = run("surface", "--data", str(files / "tp.json"), "--cocycle",
                       str(files / "theta.json"))
    assert code == 0 and out.strip() == "1*[2]"
    code, out, _ = run("cycles", "check", str(files / "chain.json"), "--quandle", "R3")
    assert "is a cycle" in out
    code, out, _ = run("cycles", "bound", str(files / "chain.json"), "--quandle", "R3",
                       "--coeff", "Z")
    assert out.strip() == "(0,1) - (1,0) + (1,2) bounds (1,0,2)"


def test_jones_flags():
    assert run("jones", "--pd", "4_1")[1].strip() == "t^-2 - t^-1 + 1 - t + t^2"
    spin = run("jones", "--pd", "3_1", "--bracket")[1].strip()
    loop = run("jones", "--pd", "3_1", "--bracket", "--loop-norm")[1].strip()
    assert spin != loop


def test_reproduce_subset_and_fault(files):
    code, out, _ = run("reproduce", "--only", "1", "2", "4", "--json")
    doc = json.loads(out)
    assert code == 0 and [i["passed"] for i in doc["result"]["items"]] == [True] * 3
    code, out, _ = run("reproduce", "--only", "3", "--theta", str(files / "theta_bad.json"))
    assert code == 1 and "[FAIL]" in out
    assert run("reproduce", "--only", "13")[0] == 2


def test_json_is_deterministic(files):
    a = json.loads(run("--json", "col", "--pd", "4_1", "--quandle", "R5")[1])
    b = json.loads(run("col", "--pd", "4_1", "--quandle", "R5", "--json")[1])
    a.pop("wall_time"), b.pop("wall_time")
    assert a == b and a["result"] == {"count": 25}


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "quandlekit", "col", "--pd", "3_1",
                          "--quandle", "R3"], capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.strip() == "9"
