import json
import os
import subprocess
import sys

import pytest

from braidhom.cli import main
from braidhom.representations import dump_representation, symplectic_rep


def run(capsys, *args):
    code = main(list(args))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_compute_symplectic_json(capsys):
    code, out, _ = run(capsys, "compute", "--type", "A", "--n", "3", "--coeff", "symplectic", "--max-degree", "2")
    doc = json.loads(out)
    assert code == 0
    assert doc["homology"][0] == {"degree": 0, "rank": 0, "torsion": []}
    assert set(doc) == {"type", "n", "coefficients", "homology", "annihilator_exponent_per_degree",
                        "engine_version", "sign_convention"}


def test_compute_trivial_degree_one(capsys):
    _, out, _ = run(capsys, "compute", "--type", "A", "--n", "3", "--max-degree", "2")
    assert json.loads(out)["homology"][1] == {"degree": 1, "rank": 1, "torsion": []}


def test_trivial_group(capsys):
    _, out, _ = run(capsys, "compute", "--type", "A", "--n", "1")
    assert json.loads(out)["homology"] == [{"degree": 0, "rank": 1, "torsion": []}]


def test_csv_and_md(capsys):
    _, out, _ = run(capsys, "compute", "--n", "5", "--coeff", "symplectic", "--format", "csv")
    assert out.splitlines()[:3] == ["degree,rank,torsion", "0,0,", "1,0,2"]
    _, out, _ = run(capsys, "compute", "--n", "3", "--coeff", "symplectic", "--format", "md")
    assert "| 1 | Z/2 | 2 |" in out


def test_custom_coefficients(capsys, tmp_path):
    path = tmp_path / "r.json"
    path.write_text(dump_representation(symplectic_rep(3)))
    code, out, _ = run(capsys, "compute", "--n", "3", "--coeff", f"custom:{path}")
    assert code == 0 and json.loads(out)["homology"][1]["torsion"] == [2]


@pytest.mark.parametrize("args", [
    ["compute", "--type", "B", "--n", "3", "--coeff", "symplectic"],
    ["compute", "--n", "4", "--coeff", "burau-1"],
    ["compute", "--n", "3", "--coeff", "nonsense"],
    ["compute", "--n", "3", "--coeff", "custom:/no/such/file"],
    ["compute", "--n", "0"],
    ["compute", "--n", "9", "--coeff", "symplectic", "--max-rank", "100"],
    ["verify", "bogus"],
    ["nf", "1 q"],
    ["frobnicate"],
])
def test_usage_errors(capsys, args):
    assert run(capsys, *args)[0] == 2


def test_verify_exit_codes(capsys):
    assert run(capsys, "verify", "torsion-theorem", "--n", "5", "--max-degree", "4")[0] == 0
    assert run(capsys, "verify", "splitting", "--n", "2", "--max-degree", "1")[0] == 0
    assert run(capsys, "verify", "double-cover", "--n", "2")[0] == 1


def test_nf(capsys):
    assert run(capsys, "nf", "1 -1")[1].strip() == "Δ^0 · ()"
    assert run(capsys, "nf", "1 2 1")[1] == run(capsys, "nf", "2 1 2")[1]
    assert run(capsys, "nf", "1 1")[1].strip() == "Δ^0 · (1)(1)"


def test_cache_hit_byte_identical(capsys, tmp_path):
    args = ["compute", "--type", "B", "--n", "3", "--coeff", "sign-cover", "--cache-dir", str(tmp_path)]
    first = run(capsys, *args)[1]
    assert list(tmp_path.iterdir())
    assert run(capsys, *args)[1] == first


def test_pure_python_backend_agrees():
    args = [sys.executable, "-m", "braidhom", "compute", "--type", "B", "--n", "4"]
    env = dict(os.environ, BRAIDHOM_PURE_PYTHON="1")
    env.pop("BRAIDHOM_CACHE_DIR", None)
    pure = subprocess.run(args, env=env, capture_output=True, text=True, check=True).stdout
    fast = subprocess.run(args, capture_output=True, text=True, check=True).stdout
    assert pure == fast
    probe = [sys.executable, "-c", "import braidhom; print(braidhom.BACKEND)"]
    assert subprocess.run(probe, env=env, capture_output=True, text=True).stdout.strip() == "python"
