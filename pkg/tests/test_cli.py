import csv
import io
import json
import subprocess
import sys

import pytest

from planarharm.cli import run
from planarharm.exactalg import MultiPoly, from_json_obj


def build_json(*args):
    code, out = run(["build", *args])
    assert code == 0
    doc = json.loads(out)
    return doc, from_json_obj(doc["poly"], doc["world"])


def test_build_harmonic_json():
    doc, p = build_json("--n", "1", "--eps", "0")
    assert p == MultiPoly.var(3, 1)
    assert doc["text"] == "x1" and doc["name"] == "h[1,0]"


def test_build_phi():
    _, p = build_json("--basis", "phi", "--order", "1", "--j", "0", "--N", "4")
    assert p == MultiPoly.var(4, 1) ** 2 - MultiPoly.var(4, 2) ** 2


def test_build_latex():
    code, out = run(["build", "--format", "latex", "--n", "2", "--eps", "0"])
    assert code == 0 and out.strip() == "x_{1}^{2}-x_{2}^{2}"


def test_build_p_alpha_csv():
    code, out = run(["build", "--basis", "p", "--alpha", "1,0,0", "--k", "1/2", "--format", "csv"])
    rows = list(csv.reader(io.StringIO(out)))
    assert code == 0 and rows[0] == ["e1", "e2", "e3", "coef"]
    assert sorted(rows[1:]) == [["0", "0", "1", "1/2"], ["0", "1", "0", "1/2"], ["1", "0", "0", "3/2"]]


@pytest.mark.parametrize("args", [
    ["--n", "7", "--eps", "1", "--N", "4", "--k", "3/5", "--k1", "2/9"],
    ["--basis", "psi", "--order", "3", "--j", "2"],
])
def test_json_roundtrip_and_determinism(args):
    code1, out1 = run(["build", *args])
    code2, out2 = run(["build", *args])
    assert code1 == code2 == 0 and out1 == out2
    doc = json.loads(out1)
    p = from_json_obj(doc["poly"], doc["world"])
    assert json.loads(json.dumps(doc["poly"])) == doc["poly"]
    assert from_json_obj(json.loads(json.dumps(doc["poly"]))) == p


@pytest.mark.parametrize("args", [
    ["build", "--n", "-1"],
    ["build", "--n", "2", "--eps", "2"],
    ["build", "--k", "0.5", "--n", "1"],
    ["build", "--basis", "phi", "--order", "1", "--j", "3"],
    ["build"],
    ["verify", "--samples", "0"],
    ["calogero", "check", "--m", "1", "--n", "0", "--omega", "-1"],
    ["table", "bogus"],
])
def test_usage_errors_exit_2(args):
    code, _ = run(args)
    assert code == 2


def test_verify_passes_and_is_deterministic():
    args = ["verify", "--max-n", "5", "--seed", "42"]
    code, out = run(args)
    assert code == 0, out
    assert out.splitlines()[-1].startswith("PASS")
    assert all(line.startswith(("PASS", "params")) for line in out.splitlines())
    assert run(args) == (code, out)


def test_verify_fault_injection_reports_counterexample():
    code, out = run(["verify", "--inject-fault", "--suite", "harmonicity", "--format", "json"])
    doc = json.loads(out)
    assert code == 1 and not doc["passed"]
    bad = doc["suites"][0]["counterexample"]
    assert bad["law"] == "Delta_B h = 0"
    assert from_json_obj(bad["h"]).degree() == 5


def test_verify_classical_limit():
    code, out = run(["verify", "--samples", "1", "--k", "0", "--k1", "0"])
    assert code == 0
    assert "PASS classical" in out and "k=0 k1=0" in out


@pytest.mark.parametrize("kind", ["values", "leading", "norms"])
def test_tables_agree(kind):
    code, out = run(["table", kind, "--max-n", "3"])
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and rows
    assert all(r["agreement"] == "true" for r in rows)


def test_values_table_zero_rows():
    _, out = run(["table", "values", "--max-n", "3"])
    rows = {r["label"]: r for r in csv.DictReader(io.StringIO(out))}
    assert rows["h[2,0]"]["closed_form"] == "0" and rows["h[3,1]"]["closed_form"] == "0"


def test_norm_table_latex():
    code, out = run(["table", "norms", "--max-n", "2", "--format", "latex"])
    assert code == 0 and out.startswith("\\begin{tabular}") and "false" not in out


def test_calogero_check():
    code, out = run(["calogero", "check", "--m", "2", "--n", "1", "--omega", "3/2",
                     "--k", "1/2", "--k1", "1/3"])
    # N k2 = 3 (1 + 1/3 + 1/2) = 11/2, eigenvalue 2 (3/2)(2 + 2 + 11/2) = 57/2
    assert code == 0
    assert out.splitlines()[0].endswith("57/2")
    assert out.count("PASS") == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "planarharm", "build", "--n", "1"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and json.loads(proc.stdout)["text"] == "x1"
