"""One-step diagnostics of the symmetrized Milstein scheme.

For each step size the SMS and PMS are run side by side on the same
increments. Per step the following are accumulated:

* the local error ``X_{k+1} - X_k``,
* the corrected local error
  ``sigma X_{k+1}^alpha - sigma X_k^alpha - alpha sigma^2 X_k^(2 alpha - 1) dW``,
* whether the raw increment was nonpositive (a sign flip),
* whether the PMS state has left the SMS state (per trajectory).
"""

import math
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

import numpy as np
import pandas as pd
import structlog

from app.enums import DiagnosticsColumns, SchemeId
from app.errors import ConfigError, IndivisibleStepCount, InsufficientPoints
from app.interfaces import Experiment
from app.model import CevModel, base_step_bound, derive_constants
from app.paths import (
    GridSpec,
    TrajectoryChunk,
    generate_increments,
    run_chunks,
    trajectory_chunks,
)
from app.schemes import BaseScheme, SchemeFactory

from .ladder import STEP_COUNT_TOL, base_step_count
from .regression import ols_loglog

DEFAULT_DIAGNOSTIC_EXPONENTS = (3, 4, 5, 6)


@dataclass(frozen=True)
class _ChunkTotals:
    local_sq: float
    corrected_sq: float
    sign_flips: int
    diverged: int


@dataclass(frozen=True)
class DiagnosticsLevel:
    dt: float
    local_error_rms: float
    corrected_local_error_rms: float
    sign_flip_frequency: float
    pms_sms_divergence_frequency: float


@dataclass(frozen=True)
class DiagnosticsReport:
    local_error_slope: float
    corrected_local_error_slope: float
    levels: List[DiagnosticsLevel] = field(default_factory=list)

    @property
    def sign_flip_freq_by_dt(self) -> List[Tuple[float, float]]:
        return [(level.dt, level.sign_flip_frequency) for level in self.levels]

    @property
    def pms_sms_divergence_freq_by_dt(self) -> List[Tuple[float, float]]:
        return [(level.dt, level.pms_sms_divergence_frequency) for level in self.levels]

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            [
                (
                    level.dt,
                    level.local_error_rms,
                    level.corrected_local_error_rms,
                    level.sign_flip_frequency,
                    level.pms_sms_divergence_frequency,
                )
                for level in self.levels
            ],
            columns=DiagnosticsColumns.list_column_order(),
        )


def default_dt_ladder(
    model: CevModel, exponents: Sequence[int] = DEFAULT_DIAGNOSTIC_EXPONENTS
) -> List[float]:
    """Step sizes ``T / (N0 2^n)`` with ``T / N0`` within the step bound of the model."""
    n0 = base_step_count(model.horizon_T, base_step_bound(model))
    return [model.horizon_T / (n0 * 2**n) for n in exponents]


def _grid_for_dt(model: CevModel, dt: float) -> GridSpec:
    n_steps = round(model.horizon_T / dt)
    if n_steps < 1 or abs(n_steps * dt - model.horizon_T) > STEP_COUNT_TOL * model.horizon_T:
        raise IndivisibleStepCount(f"dt = {dt} does not divide the horizon T = {model.horizon_T}")
    return GridSpec(T=model.horizon_T, n_steps=n_steps)


def _chunk_totals(
    sms: BaseScheme, pms: BaseScheme, increments: np.ndarray, dt: float
) -> _ChunkTotals:
    n_paths, n_steps = increments.shape
    x = np.full(n_paths, sms.model.x0)
    x_pms = x.copy()
    diverged = np.zeros(n_paths, dtype=bool)
    local_sq = corrected_sq = 0.0
    sign_flips = 0

    for k in range(n_steps):
        dW = increments[:, k]
        outcome = sms.step(dt, x, dW)
        x_next = outcome.next_state
        local_sq += float(np.dot(x_next - x, x_next - x))
        corrected = (
            sms.diffusion(x_next)
            - sms.diffusion(x)
            - 2 * sms.milstein_coefficient(x) * dW
        )
        corrected_sq += float(np.dot(corrected, corrected))
        sign_flips += int(np.count_nonzero(outcome.reflected))

        x_pms = pms.step(dt, x_pms, dW).next_state
        x = x_next
        diverged |= x_pms != x

    return _ChunkTotals(
        local_sq=local_sq,
        corrected_sq=corrected_sq,
        sign_flips=sign_flips,
        diverged=int(np.count_nonzero(diverged)),
    )


class DiagnosticsExperiment(Experiment):
    def __init__(
        self,
        model: CevModel,
        dt_ladder: Sequence[float],
        n_trajectories: int,
        seed: int,
        threads: Optional[int] = None,
    ) -> None:
        if n_trajectories < 1:
            raise ConfigError(f"n_trajectories must be positive, got {n_trajectories}")
        if len(dt_ladder) < 2:
            raise InsufficientPoints("at least two step sizes are required to fit slopes")
        constants = derive_constants(model)
        if constants.is_defined:
            too_large = [dt for dt in dt_ladder if dt > constants.delta_max * (1 + STEP_COUNT_TOL)]
            if too_large:
                raise ConfigError(
                    f"step sizes {too_large} exceed delta_max {constants.delta_max}"
                )
        self.model = model
        self.grids = [_grid_for_dt(model, dt) for dt in sorted(dt_ladder, reverse=True)]
        self.n_trajectories = n_trajectories
        self.seed = seed
        self.threads = threads
        self.logger = structlog.get_logger(f"{__name__}.{type(self).__name__}")

    def run(self) -> pd.DataFrame:
        return self.diagnose().to_frame()

    def _level(self, stream: int, grid: GridSpec) -> DiagnosticsLevel:
        sms = SchemeFactory.build_scheme(SchemeId.SMS, self.model)
        pms = SchemeFactory.build_scheme(SchemeId.PMS, self.model)

        def work(chunk: TrajectoryChunk) -> _ChunkTotals:
            increments = generate_increments(grid, self.seed, stream, chunk.start, chunk.count)
            return _chunk_totals(sms, pms, increments, grid.dt)

        chunks = trajectory_chunks(0, self.n_trajectories, grid.n_steps)
        totals = run_chunks(work, chunks, self.threads)

        n_samples = self.n_trajectories * grid.n_steps
        level = DiagnosticsLevel(
            dt=grid.dt,
            local_error_rms=math.sqrt(sum(t.local_sq for t in totals) / n_samples),
            corrected_local_error_rms=math.sqrt(
                sum(t.corrected_sq for t in totals) / n_samples
            ),
            sign_flip_frequency=sum(t.sign_flips for t in totals) / n_samples,
            pms_sms_divergence_frequency=sum(t.diverged for t in totals)
            / self.n_trajectories,
        )
        self.logger.debug("diagnostics_level_completed", **level.__dict__)
        return level

    def diagnose(self) -> DiagnosticsReport:
        # stream 0 belongs to the strong-error ladder
        levels = [self._level(i + 1, grid) for i, grid in enumerate(self.grids)]
        local_fit = ols_loglog((lv.dt, lv.local_error_rms) for lv in levels)
        corrected_fit = ols_loglog((lv.dt, lv.corrected_local_error_rms) for lv in levels)
        self.logger.info(
            "diagnostics_fitted",
            local_error_slope=local_fit.slope,
            corrected_local_error_slope=corrected_fit.slope,
        )
        return DiagnosticsReport(
            local_error_slope=local_fit.slope,
            corrected_local_error_slope=corrected_fit.slope,
            levels=levels,
        )


def run_diagnostics(
    model: CevModel,
    dt_ladder: Sequence[float],
    n_trajectories: int,
    seed: int,
    threads: Optional[int] = None,
) -> DiagnosticsReport:
    return DiagnosticsExperiment(
        model, dt_ladder, n_trajectories, seed, threads=threads
    ).diagnose()
