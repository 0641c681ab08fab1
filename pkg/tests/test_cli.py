import pandas as pd
import pytest

import app.main
from app.cli import EXIT_CONFIG_ERROR, EXIT_OK, EXIT_RUNTIME_ERROR, main
from app.enums import Command
from app.output import MANIFEST_NAME, load_manifest


@pytest.fixture(autouse=True)
def quiet_logging(monkeypatch, tmp_path):
    monkeypatch.setattr(app.main, "configure_logging", lambda *_, **__: tmp_path / "run.log")


def test_strong_error_writes_csvs_and_plot(sample_run_config_data, write_config, tmp_path):
    assert main(["strong-error", "--config", str(write_config(sample_run_config_data))]) == EXIT_OK
    out = tmp_path / "results"
    for name in ("strong_error_sms.csv", "strong_error_ses.csv", "regression.csv", MANIFEST_NAME):
        assert (out / name).is_file()
    regression = pd.read_csv(out / "regression.csv")
    assert list(regression["scheme"]) == ["SMS", "SES"]
    assert "strong_error_ses.csv" in (out / "strong_error.gp").read_text()


def test_manifest_rerun_reproduces_results(sample_run_config_data, write_config, tmp_path):
    first, second = tmp_path / "first", tmp_path / "second"
    config = write_config(sample_run_config_data)
    assert main(["strong-error", "--config", str(config), "--out", str(first)]) == EXIT_OK
    assert load_manifest(first).seed == 5
    assert main(["strong-error", "--manifest", str(first), "--out", str(second)]) == EXIT_OK
    for name in ("strong_error_sms.csv", "strong_error_ses.csv", "regression.csv"):
        assert (first / name).read_bytes() == (second / name).read_bytes()


def test_mlmc_manifest_rerun_reproduces_results(
    sample_run_config_data, write_config, tmp_path, capsys
):
    first, second = tmp_path / "first", tmp_path / "second"
    config = write_config(sample_run_config_data)
    args = ["mlmc", "--config", str(config), "--epsilon", "0.2", "--out", str(first)]
    assert main(args) == EXIT_OK
    assert "seconds" in capsys.readouterr().out
    assert main(["mlmc", "--manifest", str(first), "--out", str(second)]) == EXIT_OK
    for name in ("mlmc_levels.csv", "mlmc_summary.csv"):
        assert (first / name).read_bytes() == (second / name).read_bytes()
    assert "seconds" not in pd.read_csv(first / "mlmc_summary.csv").columns


def test_manifest_of_another_command_is_rejected(sample_run_config_data, write_config, tmp_path):
    config = write_config(sample_run_config_data)
    assert main(["path-dump", "--config", str(config), "--out", str(tmp_path / "p")]) == EXIT_OK
    assert main(["strong-error", "--manifest", str(tmp_path / "p")]) == EXIT_CONFIG_ERROR


def test_missing_alpha_is_a_config_error(sample_run_config_data, write_config, capsys):
    del sample_run_config_data["model"]["alpha"]
    code = main(["strong-error", "--config", str(write_config(sample_run_config_data))])
    assert code == EXIT_CONFIG_ERROR
    assert "model.alpha" in capsys.readouterr().err


def test_missing_config_file_is_a_config_error(tmp_path):
    assert main(["mlmc", "--config", str(tmp_path / "absent.yaml")]) == EXIT_CONFIG_ERROR


def test_short_ladder_is_a_runtime_error(sample_run_config_data, write_config):
    sample_run_config_data["experiment"]["ladder_exponents"] = [1, 2]
    code = main(["strong-error", "--config", str(write_config(sample_run_config_data))])
    assert code == EXIT_RUNTIME_ERROR


def test_mlmc_flags_override_config(sample_run_config_data, write_config, tmp_path, capsys):
    config = write_config(sample_run_config_data)
    args = ["mlmc", "--config", str(config), "--epsilon", "0.2", "--repeats", "2"]
    assert main(args) == EXIT_OK
    summary = pd.read_csv(tmp_path / "results" / "mlmc_summary.csv")
    assert list(summary["epsilon"]) == [0.2, 0.2]
    assert "rms_error=" in capsys.readouterr().out


def test_diagnostics_and_path_dump(sample_run_config_data, write_config, tmp_path):
    config = str(write_config(sample_run_config_data))
    assert main(["diagnostics", "--config", config]) == EXIT_OK
    assert len(pd.read_csv(tmp_path / "results" / "diagnostics.csv")) == 2

    args = ["path-dump", "--config", config, "--scheme", "sms", "--scheme", "ais", "--binary"]
    assert main(args) == EXIT_OK
    out = tmp_path / "results"
    assert (out / "path_sms.csv").is_file()
    assert (out / "path_ais.csv").is_file()
    assert (out / "brownian.bin").is_file()


def test_unknown_flag_is_a_config_error():
    assert main(["mlmc", "--no-such-flag", "1"]) == EXIT_CONFIG_ERROR


def test_arithmetic_failure_during_a_run_is_a_runtime_error(
    sample_run_config_data, write_config, monkeypatch, capsys
):
    def failing_run(_config):
        raise ZeroDivisionError("float division by zero")

    monkeypatch.setitem(app.main.RUNNERS, Command.PathDump, failing_run)
    code = main(["path-dump", "--config", str(write_config(sample_run_config_data))])
    assert code == EXIT_RUNTIME_ERROR
    assert "ZeroDivisionError" in capsys.readouterr().err
