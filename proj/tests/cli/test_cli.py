import json
import os
import subprocess
from pathlib import Path

import pytest

CLI = os.environ.get("HOLOFRAME_CLI", "holoframe")
CONFIGS = Path(os.environ.get("HOLOFRAME_CONFIGS", Path(__file__).resolve().parents[2] / "configs"))
FAST = ["fock_frame", "uniqueness", "dirichlet", "sigma", "schneider"]


def run(*args):
    return subprocess.run([CLI, *map(str, args)], capture_output=True, text=True)


def strip(report):
    return {k: v for k, v in report.items() if k != "metadata"}


@pytest.mark.parametrize("name", FAST)
def test_config_runs(name, tmp_path):
    proc = run("run", CONFIGS / f"{name}.json", "--out", tmp_path, "--quiet")
    assert proc.returncode == 0, proc.stderr
    assert proc.stdout == ""
    report = json.loads((tmp_path / f"{name}.json").read_text())
    assert report["schema_version"] == 1
    assert report["experiment"] == name
    assert report["status"] == "ok"
    assert "generated_at" in report["metadata"]


def test_fock_frame_report(tmp_path):
    run("run", CONFIGS / "fock_frame.json", "--out", tmp_path, "--quiet")
    results = json.loads((tmp_path / "fock_frame.json").read_text())["results"]
    assert results["frame"]["A"] > 0
    assert results["frame"]["ratio"] < 100
    assert results["pruned"]["removed"] == 2
    header = (tmp_path / "fock_frame_spectrum.csv").read_text().splitlines()[0]
    assert header == "index,eigenvalue"


def test_dirichlet_report_echoes_ridge(tmp_path):
    run("run", CONFIGS / "dirichlet.json", "--out", tmp_path, "--quiet")
    report = json.loads((tmp_path / "dirichlet.json").read_text())
    assert report["results"]["ridge"] == 1e-10
    assert report["config"]["parameters"]["ridge"] == 1e-10
    assert report["results"]["residual_sup"] < 1e-5
    rows = (tmp_path / "dirichlet_coefficients.csv").read_text().splitlines()
    assert rows[0] == "n,m,re,im,abs"
    assert len(rows) == 26


def test_malformed_config_names_field(tmp_path):
    proc = run("run", CONFIGS / "bad_degree.json", "--out", tmp_path)
    assert proc.returncode != 0
    assert "degree" in proc.stderr
    assert not any(tmp_path.iterdir())


def test_missing_config_fails(tmp_path):
    proc = run("run", tmp_path / "absent.json")
    assert proc.returncode != 0


def test_numerical_failure_exits_zero(tmp_path):
    cfg = {
        "experiment": "sufficiency",
        "parameters": {
            "set": {"generator": "explicit", "points": [[0, 0], [1, 0], [0, 1]]},
            "weights": {"scheme": "inductive_powers", "growth": {"kind": "power", "a": 1}, "n_max": 3},
            "degree": 8,
            "m_max": 2,
            "grid": {"r_min": 0.1, "r_max": 1, "radii": 4, "angles": 8},
        },
        "output": "deficient",
    }
    path = tmp_path / "deficient_config.json"
    path.write_text(json.dumps(cfg))
    proc = run("run", path, "--out", tmp_path, "--quiet")
    assert proc.returncode == 0, proc.stderr
    report = json.loads((tmp_path / "deficient.json").read_text())
    assert report["status"] == "numerical_failure"
    assert report["results"]["m_found"] is None


def test_runs_are_deterministic(tmp_path):
    a, b = tmp_path / "a", tmp_path / "b"
    for out in (a, b):
        assert run("run", CONFIGS / "dirichlet.json", "--out", out, "--quiet").returncode == 0
    ra = json.loads((a / "dirichlet.json").read_text())
    rb = json.loads((b / "dirichlet.json").read_text())
    assert json.dumps(strip(ra), sort_keys=True) == json.dumps(strip(rb), sort_keys=True)
    assert (a / "dirichlet_coefficients.csv").read_bytes() == (b / "dirichlet_coefficients.csv").read_bytes()


def test_config_echo_round_trips(tmp_path):
    first = tmp_path / "first"
    assert run("run", CONFIGS / "sigma.json", "--out", first, "--quiet").returncode == 0
    echo = json.loads((first / "sigma.json").read_text())["config"]
    echo_path = tmp_path / "echo.json"
    echo_path.write_text(json.dumps(echo))
    second = tmp_path / "second"
    assert run("run", echo_path, "--out", second, "--quiet").returncode == 0
    again = json.loads((second / "sigma.json").read_text())
    assert again["config"] == echo
    assert strip(again) == strip(json.loads((first / "sigma.json").read_text()))


def test_summary_printed_without_quiet(tmp_path):
    proc = run("run", CONFIGS / "uniqueness.json", "--out", tmp_path)
    assert proc.returncode == 0
    assert "uniqueness: ok" in proc.stdout
