from .diagnostics import (
    DiagnosticsExperiment,
    DiagnosticsLevel,
    DiagnosticsReport,
    default_dt_ladder,
    run_diagnostics,
)
from .ladder import (
    LadderConfig,
    StrongErrorExperiment,
    StrongErrorPoint,
    StrongErrorReport,
    ThreeHalvesLadderConfig,
    ThreeHalvesStrongErrorExperiment,
    coupled_terminal_errors,
    default_reference_scheme,
    estimate_strong_error,
    estimate_three_halves_strong_error,
)
from .regression import LogLogFit, ols_loglog
from .tables import SCALE_SETTINGS, TABLE_LAYOUTS, reproduce_table, table_model

__all__ = [
    "DiagnosticsExperiment",
    "DiagnosticsLevel",
    "DiagnosticsReport",
    "LadderConfig",
    "LogLogFit",
    "SCALE_SETTINGS",
    "StrongErrorExperiment",
    "StrongErrorPoint",
    "StrongErrorReport",
    "TABLE_LAYOUTS",
    "ThreeHalvesLadderConfig",
    "ThreeHalvesStrongErrorExperiment",
    "coupled_terminal_errors",
    "default_dt_ladder",
    "default_reference_scheme",
    "estimate_strong_error",
    "estimate_three_halves_strong_error",
    "ols_loglog",
    "reproduce_table",
    "run_diagnostics",
    "table_model",
]
