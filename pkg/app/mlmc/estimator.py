"""Multilevel Monte Carlo price of the zero-coupon bond.

Level ``l`` uses ``2^(l+1)`` steps on ``[0, T]``. Its sample is the payoff on
that grid minus the payoff on the same increments coarsened once (level 0 is
the plain payoff). Level ``l`` draws from stream ``l`` of the seed; the warm-up
samples are the first trajectory ids of that stream and are kept in the final
estimate.
"""

import math
import time
from dataclasses import dataclass
from typing import List, Optional, Sequence

import numpy as np
import pandas as pd
import structlog
from pydantic import BaseModel, ConfigDict, Field, field_validator

from app.enums import MlmcColumns, MlmcSummaryColumns, SchemeId
from app.model import CevModel
from app.paths import (
    GridSpec,
    TrajectoryChunk,
    coarsen_increments,
    generate_increments,
    run_chunks,
    trajectory_chunks,
)
from app.schemes import BaseScheme, SchemeFactory

from .zcb import ZcbModel, discounted_payoffs, zcb_closed_form

MLMC_SCHEMES = (SchemeId.SMS, SchemeId.PMS, SchemeId.AIS)


class MlmcConfig(BaseModel):
    model_config = ConfigDict(frozen=True)

    epsilon: float = Field(gt=0, lt=1)
    scheme: SchemeId = SchemeId.SMS
    min_trajectories: int = Field(default=500, ge=2)
    min_levels: int = Field(default=6, ge=0)
    warmup_samples: Optional[int] = Field(default=None, ge=2)
    seed: int = Field(default=0, ge=0)

    @field_validator("scheme")
    @classmethod
    def check_scheme(cls, value: SchemeId) -> SchemeId:
        if value not in MLMC_SCHEMES:
            raise ValueError(
                f"scheme must be one of {[s.value for s in MLMC_SCHEMES]}, got {value}"
            )
        return value

    @property
    def warmup(self) -> int:
        return self.warmup_samples or self.min_trajectories


@dataclass(frozen=True)
class MlmcLevel:
    level: int
    dt: float
    n_samples: int
    variance: float
    mean_correction: float


@dataclass(frozen=True)
class MlmcResult:
    epsilon: float
    L: int
    per_level: List[MlmcLevel]
    estimator: float
    closed_form: float
    observed_error: float
    total_fine_steps: int
    wall_time: float

    @property
    def total_samples(self) -> int:
        return sum(level.n_samples for level in self.per_level)

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            [
                (lv.level, lv.dt, lv.n_samples, lv.variance, lv.mean_correction)
                for lv in self.per_level
            ],
            columns=MlmcColumns.list_column_order(),
        )

    def summary_frame(self, with_timing: bool = False) -> pd.DataFrame:
        row = [
            self.epsilon,
            self.estimator,
            self.closed_form,
            self.observed_error,
            self.total_fine_steps,
        ]
        if with_timing:
            row.append(self.wall_time)
        return pd.DataFrame(
            [row], columns=MlmcSummaryColumns.list_column_order(with_timing)
        )


def level_count(epsilon: float, min_levels: int = 6) -> int:
    if not 0 < epsilon < 1:
        raise ValueError(f"epsilon must lie in (0, 1), got {epsilon}")
    return max(math.floor(math.log2(1 / epsilon)), min_levels)


def giles_allocation(
    epsilon: float,
    variances: Sequence[float],
    dts: Sequence[float],
    min_trajectories: int = 500,
) -> List[int]:
    """N_l = ceil(2 / eps^2 sqrt(V_l dt_l) sum_k sqrt(V_k / dt_k)), at least ``min_trajectories``."""
    if len(variances) != len(dts):
        raise ValueError("variances and dts must have the same length")
    if any(v < 0 for v in variances) or any(dt <= 0 for dt in dts):
        raise ValueError("variances must be nonnegative and dts positive")

    total = sum(math.sqrt(v / dt) for v, dt in zip(variances, dts))
    return [
        max(
            math.ceil(2 / epsilon**2 * math.sqrt(v * dt) * total),
            min_trajectories,
        )
        for v, dt in zip(variances, dts)
    ]


def level_grid(model: CevModel, level: int) -> GridSpec:
    return GridSpec(T=model.horizon_T, n_steps=2 ** (level + 1))


def level_samples(
    scheme: BaseScheme, level: int, seed: int, start: int, count: int
) -> np.ndarray:
    """Coupled payoff differences for trajectory ids ``start .. start + count - 1``."""
    grid = level_grid(scheme.model, level)
    increments = generate_increments(grid, seed, level, start, count)
    fine = discounted_payoffs(scheme.simulate_batch(increments, grid.dt).integral)
    if level == 0:
        return fine
    coarse = discounted_payoffs(
        scheme.simulate_batch(coarsen_increments(increments), 2 * grid.dt).integral
    )
    return fine - coarse


class MlmcEstimator:
    def __init__(
        self, model: ZcbModel, cfg: MlmcConfig, threads: Optional[int] = None
    ) -> None:
        self.model = model
        self.cfg = cfg
        self.threads = threads
        self.scheme = SchemeFactory.build_scheme(cfg.scheme, model.to_cev_model())
        self.logger = structlog.get_logger(f"{__name__}.{type(self).__name__}")

    def _samples(self, level: int, start: int, count: int) -> np.ndarray:
        if count <= 0:
            return np.empty(0)
        grid = level_grid(self.scheme.model, level)

        def work(chunk: TrajectoryChunk) -> np.ndarray:
            return level_samples(self.scheme, level, self.cfg.seed, chunk.start, chunk.count)

        chunks = trajectory_chunks(start, count, grid.n_steps)
        return np.concatenate(run_chunks(work, chunks, self.threads))

    def estimate(self) -> MlmcResult:
        started = time.perf_counter()
        cfg = self.cfg
        L = level_count(cfg.epsilon, cfg.min_levels)
        levels = range(L + 1)
        dts = [level_grid(self.scheme.model, level).dt for level in levels]

        warmup = [self._samples(level, 0, cfg.warmup) for level in levels]
        variances = [float(np.var(sample, ddof=1)) for sample in warmup]
        allocation = giles_allocation(cfg.epsilon, variances, dts, cfg.min_trajectories)
        self.logger.info(
            "mlmc_allocation_computed",
            L=L,
            variances=variances,
            allocation=allocation,
        )

        per_level: List[MlmcLevel] = []
        total_fine_steps = 0
        for level in levels:
            n_samples = max(allocation[level], cfg.warmup)
            remaining = self._samples(level, cfg.warmup, n_samples - cfg.warmup)
            sample = np.concatenate([warmup[level], remaining])
            per_level.append(
                MlmcLevel(
                    level=level,
                    dt=dts[level],
                    n_samples=n_samples,
                    variance=float(np.var(sample, ddof=1)),
                    mean_correction=float(np.mean(sample)),
                )
            )
            total_fine_steps += n_samples * 2 ** (level + 1)
            self.logger.debug(
                "mlmc_level_completed",
                level=level,
                n_samples=n_samples,
                mean_correction=per_level[-1].mean_correction,
            )

        estimator = math.fsum(lv.mean_correction for lv in per_level)
        closed_form = zcb_closed_form(self.model)
        result = MlmcResult(
            epsilon=cfg.epsilon,
            L=L,
            per_level=per_level,
            estimator=estimator,
            closed_form=closed_form,
            observed_error=abs(estimator - closed_form),
            total_fine_steps=total_fine_steps,
            wall_time=time.perf_counter() - started,
        )
        self.logger.info(
            "mlmc_estimated",
            scheme=cfg.scheme.label,
            estimator=estimator,
            closed_form=closed_form,
            observed_error=result.observed_error,
            total_samples=result.total_samples,
        )
        return result


def mlmc_estimate(
    model: ZcbModel, cfg: MlmcConfig, threads: Optional[int] = None
) -> MlmcResult:
    return MlmcEstimator(model, cfg, threads=threads).estimate()


def rms_error(results: Sequence[MlmcResult]) -> float:
    if not results:
        raise ValueError("at least one MLMC result is required")
    return math.sqrt(math.fsum(r.observed_error**2 for r in results) / len(results))
