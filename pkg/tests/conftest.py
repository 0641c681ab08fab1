from pathlib import Path

import numpy as np
import pytest
import yaml

from app.mlmc import ZcbModel
from app.model import CevModel, CustomDrift, LinearDrift

# stands in for sigma = 0, which the model rejects
TINY_SIGMA = 1e-12


def make_model(
    sigma2: float = 1.0,
    alpha: float = 0.5,
    a: float = 10.0,
    b: float = 10.0,
    x0: float = 1.0,
    T: float = 1.0,
) -> CevModel:
    return CevModel(
        x0=x0,
        sigma=float(np.sqrt(sigma2)),
        alpha=alpha,
        drift=LinearDrift(a=a, b=b),
        T=T,
    )


@pytest.fixture
def cir_model() -> CevModel:
    """Square-root model with b(x) = 10 - 10x and sigma^2 = 1."""
    return make_model()


@pytest.fixture
def cir_model_sigma36() -> CevModel:
    return make_model(sigma2=36.0)


@pytest.fixture
def cev_model_07() -> CevModel:
    """alpha = 0.7, sigma^2 = 64."""
    return make_model(sigma2=64.0, alpha=0.7)


@pytest.fixture
def zero_noise_cir_model() -> CevModel:
    return CevModel(
        x0=1.0, sigma=TINY_SIGMA, alpha=0.5, drift=LinearDrift(a=10.0, b=10.0), T=1.0
    )


@pytest.fixture
def constant_drift_model() -> CevModel:
    """b(x) = 0.01 through a custom evaluator."""
    return CevModel(
        x0=1.0,
        sigma=1.0,
        alpha=0.5,
        drift=CustomDrift(
            evaluator=lambda x: 0.01 + 0.0 * np.asarray(x),
            lipschitz_K=0.0,
            b_at_zero=0.01,
        ),
        T=1.0,
    )


@pytest.fixture
def table5_zcb() -> ZcbModel:
    return ZcbModel(a=10.0, b=10.0, sigma=1.0, r0=1.0, T=1.0)


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(12345)


@pytest.fixture
def sample_run_config_data(tmp_path) -> dict:
    """Small square-root run; sizes keep every command under a second or two."""
    return {
        "model": {
            "x0": 1.0,
            "sigma": 1.0,
            "alpha": 0.5,
            "T": 1.0,
            "drift": {"kind": "linear", "a": 10.0, "b": 10.0},
        },
        "experiment": {
            "schemes": ["sms", "ses"],
            "ladder_exponents": [1, 2, 3],
            "reference_exponent": 4,
            "n_trajectories": 40,
            "diagnostic_exponents": [1, 2],
            "diagnostic_trajectories": 40,
            "dump_exponent": 1,
        },
        "mlmc": {"epsilon": 0.1, "min_trajectories": 20, "min_levels": 3},
        "seed": 5,
        "threads": 1,
        "output_dir": str(tmp_path / "results"),
        "log_to_console": False,
    }


@pytest.fixture
def write_config(tmp_path):
    def write(data: dict, name: str = "cevsim.yaml") -> Path:
        path = tmp_path / name
        path.write_text(yaml.safe_dump(data), encoding="utf-8")
        return path

    return write
