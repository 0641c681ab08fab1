"""Empirical convergence-rate tables for the square-root and CEV regimes."""

from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List, Literal, Optional, Tuple

import pandas as pd
import structlog

from app.enums import Scale, SchemeId, TableColumns
from app.model import (
    CevModel,
    LinearDrift,
    base_step_bound,
    cir_regime,
    theoretical_rate,
)
from app.output import write_csv

from .ladder import LadderConfig, estimate_strong_error

logger = structlog.get_logger(__name__)

type TableId = Literal[3, 4]

# columns of the published tables without an update rule in this library
NOT_AVAILABLE = "n/a"


@dataclass(frozen=True)
class ScaleSettings:
    n_trajectories: int
    ladder_exponents: Tuple[int, ...]
    reference_exponent: int


SCALE_SETTINGS: Dict[Scale, ScaleSettings] = {
    Scale.Full: ScaleSettings(50_000, tuple(range(1, 10)), 12),
    Scale.Desk: ScaleSettings(5_000, tuple(range(1, 8)), 10),
}


@dataclass(frozen=True)
class TableLayout:
    cells: Tuple[Tuple[float, float], ...]  # (alpha, sigma^2)
    schemes: Tuple[SchemeId, ...]
    unavailable: Tuple[str, ...]


TABLE_LAYOUTS: Dict[int, TableLayout] = {
    3: TableLayout(
        cells=tuple((0.5, s2) for s2 in (1.0, 4.0, 6.25, 9.0, 36.0)),
        schemes=(SchemeId.SMS, SchemeId.AIS, SchemeId.SES),
        unavailable=("BMS", "MES"),
    ),
    4: TableLayout(
        cells=tuple((0.6, s2) for s2 in (49.0, 53.29, 144.0))
        + tuple((0.7, s2) for s2 in (64.0, 81.0, 225.0)),
        schemes=(SchemeId.SMS, SchemeId.SES),
        unavailable=("BMS",),
    ),
}


def table_model(alpha: float, sigma2: float) -> CevModel:
    """x0 = 1, T = 1 and b(x) = 10 - 10x, the setting of both tables."""
    return CevModel(
        x0=1.0,
        sigma=sigma2**0.5,
        alpha=alpha,
        drift=LinearDrift(a=10.0, b=10.0),
        T=1.0,
    )


def _row(
    table_id: int,
    model: CevModel,
    sigma2: float,
    scheme: str,
    rho_hat: Optional[float] = None,
    r_squared: Optional[float] = None,
    slope_std_error: Optional[float] = None,
    theory: Optional[float] = None,
) -> dict:
    regime = cir_regime(model)
    return {
        TableColumns.Table: table_id,
        TableColumns.Alpha: model.alpha,
        TableColumns.Sigma2: sigma2,
        TableColumns.Regime: regime.value if regime else None,
        TableColumns.Scheme: scheme,
        TableColumns.RhoHat: rho_hat,
        TableColumns.RSquared: r_squared,
        TableColumns.SlopeStdError: slope_std_error,
        TableColumns.Theory: theory,
    }


def reproduce_table(
    table_id: TableId,
    scale: Scale = Scale.Desk,
    out_path: Optional[Path] = None,
    seed: int = 0,
    threads: Optional[int] = None,
) -> pd.DataFrame:
    """Fit the empirical strong rate of every implemented scheme in a table.

    Args:
        table_id: 3 for alpha = 1/2, 4 for alpha in {0.6, 0.7}.
        scale: ``Scale.Full`` for the published sizes, ``Scale.Desk`` for a
            reduced ladder and trajectory count.
        out_path: CSV destination; nothing is written when omitted.
        seed: Experiment seed shared by every cell.
        threads: Worker threads for the trajectory loop.

    Returns:
        One row per (alpha, sigma^2, scheme); cells of schemes without an
        implementation carry no values.
    """
    if table_id not in TABLE_LAYOUTS:
        raise ValueError(f"table id must be one of {sorted(TABLE_LAYOUTS)}, got {table_id}")
    layout = TABLE_LAYOUTS[table_id]
    settings = SCALE_SETTINGS[Scale(scale)]

    rows: List[dict] = []
    for alpha, sigma2 in layout.cells:
        model = table_model(alpha, sigma2)
        for scheme in layout.schemes:
            cfg = LadderConfig(
                model=model,
                scheme_under_test=scheme,
                ladder_exponents=list(settings.ladder_exponents),
                reference_exponent=settings.reference_exponent,
                n_trajectories=settings.n_trajectories,
                base_step=base_step_bound(model),
                seed=seed,
            )
            report = estimate_strong_error(cfg, threads=threads)
            rows.append(
                _row(
                    table_id,
                    model,
                    sigma2,
                    scheme.label,
                    rho_hat=report.rho_hat,
                    r_squared=report.r_squared,
                    slope_std_error=report.fit.slope_std_error,
                    theory=theoretical_rate(scheme, model),
                )
            )
            logger.info(
                "table_cell_completed",
                table=table_id,
                alpha=alpha,
                sigma2=sigma2,
                scheme=scheme.label,
                rho_hat=report.rho_hat,
            )
        for name in layout.unavailable:
            rows.append(_row(table_id, model, sigma2, name))

    frame = pd.DataFrame(rows)[TableColumns.list_column_order()]
    if out_path is not None:
        write_csv(frame, out_path)
    return frame
