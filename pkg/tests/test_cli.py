import json
import subprocess
import sys

import pytest

from hilbertdepth.cli import EXIT_DOMAIN, EXIT_FINDING, EXIT_OK, EXIT_USAGE, run
from hilbertdepth.numfn import HdepthReport


def _json(capsys):
    return json.loads(capsys.readouterr().out)


@pytest.mark.parametrize(
    "coeffs,expected",
    [("1,-20,25", 5), ("5", 1), ("1,1,1", 3), ("1,1", 2), ("1,-9,20", None), ("7,3,2,1", None)],
)
def test_hdepth_round_trip(capsys, coeffs, expected):
    assert run(["hdepth", "--coeffs", coeffs]) == EXIT_OK
    data = _json(capsys)
    rep = HdepthReport.from_dict(data)
    assert all(v >= 0 for v in rep.certificate.values)
    assert rep.certificate.d == rep.hdepth <= rep.c_bound
    if expected is not None:
        assert data["hdepth"] == expected
    assert all(isinstance(c, str) for c in data["coeffs"])


def test_hdepth_cap_env(capsys, monkeypatch):
    monkeypatch.setenv("HDEPTH_CAP", "2")
    assert run(["hdepth", "--coeffs", "1,1,1"]) == EXIT_DOMAIN
    assert run(["hdepth", "--coeffs", "1,1,1", "--cap", "10"]) == EXIT_OK


def test_beta(capsys):
    assert run(["beta", "--coeffs", "1,1", "--d", "2"]) == EXIT_OK
    assert _json(capsys) == ["1", "0", "2"]


def test_classify_quadratic(capsys):
    assert run(["classify", "--coeffs", "1,-3,1"]) == EXIT_OK
    data = _json(capsys)
    assert data["case"] == "SumNegDeltaPos" and data["valid"] is False
    assert run(["classify", "--coeffs", "2,-6,4"]) == EXIT_OK
    assert _json(capsys)["root_interval"] == {"lo": "0.500000", "hi": "1.000000"}


def test_classify_cubic(capsys):
    assert run(["classify", "--coeffs", "1,1,-1,1"]) == EXIT_OK
    assert _json(capsys)["case"] == "NegBSmallDisc"


def test_bound(capsys):
    assert run(["bound", "--coeffs", "1,-20,25"]) == EXIT_OK
    assert _json(capsys)["bound"] == 13
    assert run(["bound", "--coeffs", "1,1,-1,1"]) == EXIT_OK
    assert _json(capsys)["bound"] == 67


def test_family(capsys):
    assert run(["family", "--k", "7"]) == EXIT_OK
    data = _json(capsys)
    assert data["hdepth"] == 5 and data["beta_3_6"] == str(-2 * 49 + 35 - 13)
    assert run(["family", "--k", "3"]) == EXIT_DOMAIN


def test_geometry(capsys):
    assert run(["geometry", "--tol", "1/100"]) == EXIT_OK
    data = _json(capsys)
    assert len(data["points"]) == 4 and data["max_sum"].startswith("10.51")


def test_sweep_writes_csv(capsys, tmp_path):
    out = tmp_path / "q.csv"
    code = run(["sweep", "--degree", "2", "--range", "1..3", "--range=-8..8", "--range", "1..3", "--out", str(out)])
    assert code == EXIT_OK
    summary = _json(capsys)
    lines = out.read_text().splitlines()
    assert lines[0] == "a0,a1,a2,hdepth,c_bound,case"
    assert len(lines) - 1 == summary["valid"]
    assert summary["violations"] == []


def test_sweep_config_file(capsys, tmp_path):
    cfg = tmp_path / "box.cfg"
    cfg.write_text("degree = 3\na0 = 1..2\na1 = 0..3\na2 = 0..3\na3 = 1..2\nfilter = bc_nonneg\n")
    assert run(["sweep", "--config", str(cfg)]) == EXIT_OK
    data = _json(capsys)
    assert list(data["per_case_max"]) == ["bc_nonneg"]


def test_explore_records_seed(capsys, tmp_path):
    out = tmp_path / "e.csv"
    ranges = ["1..5", "-5..5", "-5..5", "-5..5", "1..3"]
    args = ["explore", "--degree", "4", "--seed", "42", "--samples", "500", "--out", str(out)]
    args += [f"--range={r}" for r in ranges]
    assert run(args) == EXIT_OK
    data = _json(capsys)
    assert data["seed"] == 42 and data["mode"] == "random"
    assert out.read_text().startswith("# seed=42\na0,a1,a2,a3,a4,hdepth")


def test_sweep_cap_violation_exit(capsys):
    assert run(["sweep", "--degree", "1", "--range", "1..1", "--range", "5..5", "--cap", "1"]) == EXIT_FINDING


@pytest.mark.parametrize(
    "argv",
    [[], ["hdepth"], ["hdepth", "--coeffs", "1,x"], ["nope"], ["geometry", "--tol", "0"], ["sweep"]],
)
def test_usage_errors(argv, capsys):
    assert run(argv) == EXIT_USAGE


@pytest.mark.parametrize("coeffs", ["0,1", "1,-3,1", "1,2,-1"])
def test_domain_errors(coeffs, capsys):
    assert run(["hdepth", "--coeffs", coeffs]) == EXIT_DOMAIN


def test_verify_quadratic_quick(capsys):
    assert run(["verify", "--suite", "quadratic", "--quick"]) == EXIT_OK
    assert _json(capsys)[0]["ok"] is True


def test_verify_geometry_and_family(capsys):
    assert run(["verify", "--suite", "geometry", "--suite", "family"]) == EXIT_OK


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "hilbertdepth", "hdepth", "--coeffs", "1,-20,25"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and json.loads(proc.stdout)["hdepth"] == 5
