import numpy as np
import pytest

import app.paths.batching
from app.errors import ConfigError, IndivisibleStepCount, InsufficientPoints
from app.experiments import DiagnosticsExperiment, default_dt_ladder, run_diagnostics
from app.experiments.tables import table_model
from app.model import base_step_bound, derive_constants


def test_default_ladder_is_dyadic_below_bound(cir_model):
    dts = default_dt_ladder(cir_model)
    assert len(dts) == 4
    assert dts[0] <= derive_constants(cir_model).delta_max / 8
    np.testing.assert_allclose(np.array(dts[:-1]) / np.array(dts[1:]), 2.0)


def test_rejects_single_step_size(cir_model):
    with pytest.raises(InsufficientPoints, match="two step sizes"):
        DiagnosticsExperiment(cir_model, [0.001], n_trajectories=10, seed=0)


def test_rejects_step_above_bound(cir_model):
    with pytest.raises(ConfigError, match="delta_max"):
        DiagnosticsExperiment(cir_model, [0.5, 0.25], n_trajectories=10, seed=0)


def test_rejects_step_not_dividing_horizon(cir_model):
    with pytest.raises(IndivisibleStepCount, match="divide"):
        DiagnosticsExperiment(cir_model, [0.003, 0.0015], n_trajectories=10, seed=0)


def test_report_layout(cir_model):
    dts = default_dt_ladder(cir_model, exponents=(1, 2, 3))
    report = run_diagnostics(cir_model, dts, n_trajectories=200, seed=3, threads=1)
    assert [dt for dt, _ in report.sign_flip_freq_by_dt] == pytest.approx(dts)
    assert all(0 <= f <= 1 for _, f in report.pms_sms_divergence_freq_by_dt)
    frame = report.to_frame()
    assert list(frame.columns) == [
        "dt",
        "local_error_rms",
        "corrected_local_error_rms",
        "sign_flip_frequency",
        "pms_sms_divergence_frequency",
    ]
    assert frame["local_error_rms"].is_monotonic_decreasing


def test_report_does_not_depend_on_threads(cir_model, monkeypatch):
    monkeypatch.setattr(app.paths.batching, "MAX_CHUNK_ROWS", 32)
    dts = default_dt_ladder(cir_model, exponents=(1, 2))
    reports = [
        run_diagnostics(cir_model, dts, n_trajectories=150, seed=3, threads=threads)
        for threads in (1, 3)
    ]
    assert reports[0] == reports[1]


@pytest.mark.slow
def test_local_error_rates(cir_model):
    report = run_diagnostics(
        cir_model, default_dt_ladder(cir_model), n_trajectories=10_000, seed=0
    )
    assert report.local_error_slope == pytest.approx(0.5, abs=0.07)
    assert report.corrected_local_error_slope == pytest.approx(1.0, abs=0.12)
    finest_dt, sign_flips = report.sign_flip_freq_by_dt[-1]
    assert finest_dt == pytest.approx(default_dt_ladder(cir_model)[-1])
    assert sign_flips < 1e-3
    assert report.pms_sms_divergence_freq_by_dt[-1][1] < 1e-3


def test_default_ladder_falls_back_to_lipschitz_bound():
    model = table_model(0.6, 53.29)
    assert not derive_constants(model).is_defined
    dts = default_dt_ladder(model, exponents=(1, 2))
    assert dts[0] <= base_step_bound(model) / 2
    report = run_diagnostics(model, dts, n_trajectories=20, seed=1, threads=1)
    assert len(report.to_frame()) == 2
