from .estimator import (
    MLMC_SCHEMES,
    MlmcConfig,
    MlmcEstimator,
    MlmcLevel,
    MlmcResult,
    giles_allocation,
    level_count,
    level_samples,
    mlmc_estimate,
    rms_error,
)
from .zcb import ZcbModel, discounted_payoff, discounted_payoffs, zcb_closed_form

__all__ = [
    "MLMC_SCHEMES",
    "MlmcConfig",
    "MlmcEstimator",
    "MlmcLevel",
    "MlmcResult",
    "ZcbModel",
    "discounted_payoff",
    "discounted_payoffs",
    "giles_allocation",
    "level_count",
    "level_samples",
    "mlmc_estimate",
    "rms_error",
]
