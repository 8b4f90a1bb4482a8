import json
import subprocess
import sys

import pytest


def run(*args, cwd=None):
    return subprocess.run(
        [sys.executable, "-m", "orbitlim", *args],
        capture_output=True,
        text=True,
        cwd=cwd,
    )


def term(coeff, *exp):
    return {"coeff": str(coeff), "exp": list(exp)}


def quartic_scenario():
    # (x^2 + y^2 + z^2)^2
    terms = [
        term(1, 4, 0, 0), term(2, 2, 2, 0), term(2, 2, 0, 2),
        term(1, 0, 4, 0), term(2, 0, 2, 2), term(1, 0, 0, 4),
    ]
    return {
        "rep": {"kind": "forms", "n_vars": 3, "degree": 4},
        "vectors": {"f": terms},
        "onps": {"lam": [0, 0, 1]},
    }


def popov_scenario():
    return {
        "rep": {"kind": "leftmult", "rows": 4, "cols": 3},
        "vectors": {"y": [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"], ["0", "0", "0"]]},
        "onps": {"lam": [0, 1, 2, 2]},
    }


@pytest.fixture
def write(tmp_path):
    def _write(doc, name="s.json"):
        path = tmp_path / name
        path.write_text(json.dumps(doc), encoding="utf-8")
        return str(path)

    return _write


def test_stab_x_cubed(write):
    path = write({"rep": {"kind": "forms", "n_vars": 1, "degree": 3}, "vectors": {"f": [term(1, 3)]}})
    result = run("stab", "--scenario", path, "--vector", "f")
    assert result.returncode == 0, result.stderr
    doc = json.loads(result.stdout)
    assert doc["stabilizer"]["dim"] == 0
    assert doc["schema"] == 1


def test_limit_and_hatk(write):
    path = write(quartic_scenario())
    doc = json.loads(run("limit", "--scenario", path).stdout)
    assert doc["d"] == 0 and doc["e"] == 2
    result = run("hatk", "--scenario", path, "--text")
    assert result.returncode == 0
    assert "dims.K: 3" in result.stdout
    assert "dims.Hye: 3" in result.stdout


def test_hatk_output_is_byte_identical(write):
    path = write(quartic_scenario())
    first = run("hatk", "--scenario", path).stdout
    second = run("--json", "hatk", "--scenario", path).stdout
    assert first == second
    assert first.endswith("\n")


def test_align_popov_case_b(write):
    path = write(popov_scenario())
    doc = json.loads(run("align", "--scenario", path, "--seed", "3").stdout)
    assert doc["result"]["verdict"] == "CaseB"


def test_colimit_popov(write):
    path = write(popov_scenario())
    result = run("colimit", "--scenario", path)
    doc = json.loads(result.stdout)
    assert doc["dims"]["codim"] == 2
    assert doc["strict_tangent_excess"] is True


def test_colimit_bound_violation_exit_2(write):
    path = write(popov_scenario())
    result = run("colimit", "--scenario", path, "--bound", "1")
    assert result.returncode == 2
    assert json.loads(result.stderr)["error"] == "InvariantViolation"


def test_strata(write):
    terms = [term(1, 1, 1, 0), term(1, 1, 0, 1), term(1, 0, 1, 1), term(1, 0, 0, 2)]
    path = write({
        "rep": {"kind": "forms", "n_vars": 3, "degree": 2},
        "vectors": {"y": terms},
        "onps": {"t": [0, 0, 1]},
    })
    doc = json.loads(run("strata", "--scenario", path).stdout)
    assert doc["intermediate"]["t_prime"] == ["1", "-1", "1"]
    assert doc["intermediate"]["epsilon"] == "1"
    assert doc["support_dim"] == 3


def test_nc_test_quadric(write):
    path = write({
        "rep": {"kind": "leftmult", "rows": 3, "cols": 1},
        "vectors": {"z": [["0"], ["0"], ["0"]], "ye": [["1"], ["0"], ["1"]]},
        "functions": {"f2": [term(1, 2, 0, 0)]},
        "params": {"k": 2},
    })
    doc = json.loads(run("nc-test", "--scenario", path, "--vector", "z", "--direction", "ye").stdout)
    assert doc["result"]["verdict"] == "Rejected"
    assert doc["result"]["sample_index"] == 0


def test_catalog_run_and_list():
    result = run("catalog", "run", "quartic", "--text")
    assert result.returncode == 0
    assert "checks.Hye_eq_Khat: PASS" in result.stdout
    doc = json.loads(run("catalog", "list").stdout)
    assert "popov" in doc["entries"]
    doc = json.loads(run("catalog", "run", "popov", "--colimit").stdout)
    assert doc["ok"] is True
    assert doc["data"]["colimit"]["codim"] == 2


def test_input_errors_exit_3(tmp_path, write):
    result = run("stab", "--scenario", str(tmp_path / "missing.json"))
    assert result.returncode == 3
    bad = tmp_path / "bad.json"
    bad.write_text("{not json", encoding="utf-8")
    assert run("stab", "--scenario", str(bad)).returncode == 3
    path = write({"rep": {"kind": "spinor"}, "vectors": {}})
    assert run("stab", "--scenario", path).returncode == 3
    path = write(dict(quartic_scenario(), onps={"lam": [0, 1]}), "short.json")
    result = run("limit", "--scenario", path)
    assert result.returncode == 3
    assert json.loads(result.stderr)["error"] == "InputError"
    assert run("catalog", "run", "nope").returncode == 3


def test_ambiguous_vector_exit_3(write):
    doc = popov_scenario()
    doc["vectors"]["w"] = doc["vectors"]["y"]
    assert run("stab", "--scenario", write(doc)).returncode == 3
