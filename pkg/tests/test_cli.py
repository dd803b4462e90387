import json

import jsonschema
import pytest

from gradedlab.cli import main
from gradedlab.experiments import (
    ConfigError,
    ExperimentConfig,
    UnknownExperimentError,
    load_config,
    run_experiment,
)
from gradedlab.reporting import REPORT_SCHEMA, emit_report


def write_config(tmp_path, **fields):
    path = tmp_path / "config.json"
    path.write_text(json.dumps(fields))
    return str(path)


SMALL = {
    "commbound": {"trials": 4, "dims": [4], "n_grid": [1.0, 4.0],
                  "t_grid": {"start": 1.0, "stop": 100.0, "points": 8}},
    "expfactor": {"trials": 3, "dims": [4], "t_grid": {"start": 10.0, "stop": 1000.0, "points": 16}},
    "techlemma": {"trials": 2, "dims": [4], "t_grid": {"start": 10.0, "stop": 1000.0, "points": 10}},
    "compose": {"trials": 2, "dims": [4], "t_grid": {"start": 1.0, "stop": 1000.0, "points": 16}},
    "bott": {"n_basis": 12, "t_grid": {"start": 1.0, "stop": 1000.0, "points": 12}},
    "perturb": {"trials": 1, "dims": [4], "n_basis": 10,
                "t_grid": {"start": 1.0, "stop": 1000.0, "points": 16}},
    "appendixB": {"trials": 10, "dims": [4]},
}


@pytest.mark.parametrize("experiment", sorted(SMALL))
def test_every_experiment_runs_and_reports(tmp_path, experiment):
    config = write_config(tmp_path, experiment=experiment, **SMALL[experiment])
    out = tmp_path / "out"
    assert main(["--config", config, "--out", str(out)]) == 0
    report = json.loads((out / "report.json").read_text())
    jsonschema.validate(report, REPORT_SCHEMA)
    assert report["experiment"] == experiment
    assert report["pass"] is True
    assert (out / "certificates.jsonl").exists()
    for line in (out / "certificates.jsonl").read_text().splitlines():
        record = json.loads(line)
        assert set(record) == {"check", "seed", "lhs", "rhs", "margin", "pass"}


def test_reports_are_byte_identical(tmp_path):
    config = write_config(tmp_path, experiment="commbound", **SMALL["commbound"])
    out1, out2 = tmp_path / "a", tmp_path / "b"
    assert main(["--config", config, "--out", str(out1)]) == 0
    assert main(["--config", config, "--out", str(out2)]) == 0
    assert (out1 / "report.json").read_bytes() == (out2 / "report.json").read_bytes()
    assert (out1 / "certificates.jsonl").read_bytes() == (out2 / "certificates.jsonl").read_bytes()


def test_seed_changes_report(tmp_path):
    config = write_config(tmp_path, experiment="commbound", **SMALL["commbound"])
    out1, out2 = tmp_path / "a", tmp_path / "b"
    assert main(["--config", config, "--out", str(out1), "--seed", "1"]) == 0
    assert main(["--config", config, "--out", str(out2), "--seed", "2"]) == 0
    assert (out1 / "certificates.jsonl").read_bytes() != (out2 / "certificates.jsonl").read_bytes()


def test_failing_certificates_exit_1(tmp_path):
    """Exit status 0 holds exactly when every certificate passes; an
    impossible tolerance forces a recorded failure and exit 1."""
    config = write_config(
        tmp_path,
        experiment="techlemma",
        tolerances={"final_sup": 1e-30},
        **SMALL["techlemma"],
    )
    out = tmp_path / "out"
    assert main(["--config", config, "--out", str(out)]) == 1
    report = json.loads((out / "report.json").read_text())
    assert report["pass"] is False
    failed = [c for c in report["checks"] if c["failed"]]
    assert failed and failed[0]["name"] == "sweep_final"


def test_unknown_experiment_exits_2_and_writes_nothing(tmp_path):
    out = tmp_path / "out"
    assert main(["does-not-exist", "--out", str(out)]) == 2
    assert not out.exists()


def test_invalid_grid_exits_3(tmp_path):
    config = write_config(
        tmp_path, experiment="commbound", t_grid={"start": 10.0, "stop": 1.0, "points": 8}
    )
    assert main(["--config", config, "--out", str(tmp_path / "out")]) == 3


def test_unwritable_output_exits_4(tmp_path):
    blocker = tmp_path / "blocker"
    blocker.write_text("a file, not a directory")
    config = write_config(tmp_path, experiment="commbound", **SMALL["commbound"])
    assert main(["--config", config, "--out", str(blocker)]) == 4


def test_compose_at_default_scale(tmp_path):
    """The default compose suite (seed 42, 50 trials, dim 8) exits 0 with
    every fitted exponent certified."""
    out = tmp_path / "out"
    assert main(["compose", "--seed", "42", "--out", str(out)]) == 0
    report = json.loads((out / "report.json").read_text())
    checks = {c["name"]: c for c in report["checks"]}
    assert checks["compose_defect"]["failed"] == 0
    assert checks["compose_defect"]["passed"] == 200  # 50 trials x 2 generators x 2 functions
    assert checks["compose_identity"]["failed"] == 0


def test_bott_report_contains_kernel_dim(tmp_path):
    config = write_config(tmp_path, experiment="bott", **SMALL["bott"])
    out = tmp_path / "out"
    assert main(["--config", config, "--out", str(out)]) == 0
    report = json.loads((out / "report.json").read_text())
    assert report["summary"]["kernel_dim"] == 1
    spectrum = (out / f"spectrum_n{SMALL['bott']['n_basis']}.csv").read_text().splitlines()
    assert spectrum[0] == "index,eigenvalue"


def test_profile_csv_headers(tmp_path):
    config = write_config(tmp_path, experiment="expfactor", **SMALL["expfactor"])
    out = tmp_path / "out"
    assert main(["--config", config, "--out", str(out)]) == 0
    profiles = sorted(out.glob("profile_*.csv"))
    assert profiles
    for path in profiles:
        assert path.read_text().splitlines()[0] == "t,value"


def test_emit_report_refuses_empty_results(tmp_path):
    config = load_config(None, experiment="bott")
    result = run_experiment(
        ExperimentConfig(experiment="bott", n_basis=10, t_points=12)
    )
    empty = type(result)(
        experiment=result.experiment,
        config=result.config,
        checks=[],
        certificates=[],
        profiles=[],
        summary={},
        passed=True,
    )
    with pytest.raises(ValueError):
        emit_report(empty, tmp_path / "out")
    assert not (tmp_path / "out" / "report.json").exists()


def test_load_config_validation(tmp_path):
    with pytest.raises(ConfigError):
        load_config(None, experiment=None)
    with pytest.raises(UnknownExperimentError):
        load_config(None, experiment="nope")
    bad = tmp_path / "bad.json"
    bad.write_text("not json {")
    with pytest.raises(ConfigError):
        load_config(bad, experiment="bott")
    with pytest.raises(ConfigError):
        load_config(None, experiment="bott", seed=-1)
    malformed_grid = tmp_path / "grid.json"
    malformed_grid.write_text(json.dumps({"experiment": "bott", "t_grid": 5}))
    with pytest.raises(ConfigError):
        load_config(malformed_grid)


def test_flag_overrides_config_experiment(tmp_path):
    config = write_config(tmp_path, experiment="commbound", n_basis=12)
    out = tmp_path / "out"
    assert main(["--config", config, "--experiment", "bott", "--out", str(out)]) == 0
    report = json.loads((out / "report.json").read_text())
    assert report["experiment"] == "bott"
