from .cev import CevModel
from .constants import (
    DerivedConstants,
    base_step_bound,
    derive_constants,
    lipschitz_step_bound,
)
from .drift import CustomDrift, DriftSpec, LinearDrift, drift_eval
from .hypotheses import (
    HypothesisReport,
    check_hypotheses,
    cir_regime,
    theoretical_rate,
)

__all__ = [
    "CevModel",
    "CustomDrift",
    "DerivedConstants",
    "DriftSpec",
    "HypothesisReport",
    "LinearDrift",
    "base_step_bound",
    "check_hypotheses",
    "cir_regime",
    "derive_constants",
    "drift_eval",
    "lipschitz_step_bound",
    "theoretical_rate",
]
