import io
import json
import subprocess
import sys

import pytest

from gendem.cli import run

import oracles


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_points_json_sorted():
    code, out, _ = call("points", "--type", "A2", "--word", "1,2,1", "--m", "1,1,1", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["schema"] == "gendem/1"
    assert doc["count"] == 13
    pts = [tuple(p) for p in doc["points"]]
    assert pts == sorted(oracles.A2_121_OMEGA)


def test_points_csv():
    code, out, _ = call("points", "--type", "C2", "--word", "1,2,1,2", "--m", "1,1,1,1", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "a1,a2,a3,a4"
    assert len(lines) == 62


def test_verify_exit_zero():
    code, out, _ = call("verify", "--type", "A1", "--word", "1,1,1", "--m", "1,1,1", "--depth", "2")
    assert code == 0
    doc = json.loads(out)
    assert doc["passed"] is True
    assert {c["name"] for c in doc["checks"]} == {"a_image", "b_semigroup", "c_transform", "d_eps", "e_cutting"}


def test_length_mismatch():
    code, out, err = call("points", "--type", "A2", "--word", "1,2", "--m", "1,1,1")
    assert code == 1 and out == "" and "length" in err


@pytest.mark.parametrize(
    "argv",
    [
        ["points", "--type", "Q2", "--word", "1", "--m", "1"],
        ["points", "--type", "A2", "--word", "1,x", "--m", "1,1"],
        ["points", "--type", "A2", "--word", "1,3", "--m", "1,1"],
        ["verify", "--type", "A2", "--word", "1", "--m", "1", "--depth", "0"],
        ["polytope", "--type", "A2", "--word", "1", "--m", "1", "--point", "1/0"],
        ["points", "--word", "1", "--m", "1"],
    ],
)
def test_validation_errors(argv):
    assert call(*argv)[0] == 1


def test_cap_exit_code(monkeypatch):
    assert call("enumerate", "--type", "A2", "--word", "1,2,1", "--m", "1,1,1", "--cap", "5")[0] == 3
    monkeypatch.setenv("GENDEM_CAP", "5")
    assert call("enumerate", "--type", "A2", "--word", "1,2,1", "--m", "1,1,1")[0] == 3
    monkeypatch.setenv("GENDEM_CAP", "100")
    assert call("enumerate", "--type", "A2", "--word", "1,2,1", "--m", "1,1,1")[0] == 0


def test_enumerate_and_omega():
    code, out, _ = call("enumerate", "--type", "A2", "--word", "1,2,1", "--m", "1,1,1")
    doc = json.loads(out)
    assert code == 0 and doc["size"] == 13
    top = doc["elements"][0]
    assert top["omega"] == [0, 0, 0] and top["omega_prime"] == [2, 1, 1]
    code, out, _ = call("omega", "--type", "A2", "--word", "1,2,1", "--m", "1,1,1")
    doc = json.loads(out)
    assert code == 0 and doc["transform_ok"] and doc["A"][0] == [-1, -1, 1]


def test_polytope_and_hull():
    code, out, _ = call("polytope", "--type", "A1", "--word", "1,1,1", "--m", "1,1,1", "--point", "0,1,1/2")
    doc = json.loads(out)
    assert code == 0 and doc["verdict_Delta"] and doc["certified_vertex"]
    assert doc["point"] == ["0/1", "1/1", "1/2"]
    code, out, _ = call("hull", "--type", "A1", "--word", "1,1,1", "--m", "1,1,1", "--depth", "2")
    doc = json.loads(out)
    assert code == 0
    assert {"point": ["0/1", "1/1", "1/2"], "certified": True} in doc["vertices"]


def test_cartan_file(tmp_path):
    path = tmp_path / "g2.json"
    path.write_text(json.dumps({"cartan": [[2, -3], [-1, 2]]}))
    code, out, _ = call("points", "--cartan-file", str(path), "--word", "1,2", "--m", "1,1", "--format", "text")
    assert code == 0
    code2, out2, _ = call("points", "--type", "G2", "--word", "1,2", "--m", "1,1", "--format", "text")
    assert out == out2


def test_deterministic_and_out_file(tmp_path):
    argv = ["enumerate", "--type", "C2", "--word", "2,1,2", "--m", "1,1,1"]
    assert call(*argv)[1] == call(*argv)[1]
    target = tmp_path / "o.json"
    code, out, _ = call(*argv, "--out", str(target))
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["command"] == "enumerate"


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "gendem", "points", "--type", "A1", "--word", "1,1,1",
                           "--m", "1,1,1", "--format", "text"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert len(proc.stdout.strip().splitlines()) == 9
