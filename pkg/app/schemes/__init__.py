from .ais import DriftImplicitSquareRoot
from .base import BaseScheme
from .factory import SchemeFactory
from .outcome import BatchPaths, SchemePath, StepOutcome
from .pms import ProjectedMilstein
from .ses import SymmetrizedEuler
from .simulate import ais_step, pms_step, ses_step, simulate_path, sms_step
from .sms import SymmetrizedMilstein
from .three_halves import (
    ThreeHalvesModel,
    invert_states,
    simulate_three_halves,
    simulate_three_halves_batch,
)

__all__ = [
    "BaseScheme",
    "BatchPaths",
    "DriftImplicitSquareRoot",
    "ProjectedMilstein",
    "SchemeFactory",
    "SchemePath",
    "StepOutcome",
    "SymmetrizedEuler",
    "SymmetrizedMilstein",
    "ThreeHalvesModel",
    "ais_step",
    "invert_states",
    "pms_step",
    "ses_step",
    "simulate_path",
    "simulate_three_halves",
    "simulate_three_halves_batch",
    "sms_step",
]
