"""Strong-error ladder: coupled reference and test paths on dyadic grids."""

import math
from dataclasses import dataclass
from typing import Callable, List, Optional

import numpy as np
import pandas as pd
import structlog
from pydantic import BaseModel, ConfigDict, Field, PositiveInt, model_validator

from app.enums import RegressionColumns, SchemeId, StrongErrorColumns
from app.errors import InsufficientPoints
from app.interfaces import Experiment
from app.model import CevModel, LinearDrift, derive_constants
from app.paths import (
    GridSpec,
    TrajectoryChunk,
    coarsen_increments,
    generate_increments,
    run_chunks,
    trajectory_chunks,
)
from app.schemes import BaseScheme, SchemeFactory, ThreeHalvesModel, invert_states

from .regression import LogLogFit, ols_loglog

logger = structlog.get_logger(__name__)

# tolerance when T / base_step is meant to be an integer
STEP_COUNT_TOL = 1e-9

MIN_LADDER_POINTS = 3


def default_reference_scheme(model: CevModel) -> SchemeId:
    if model.is_square_root and isinstance(model.drift, LinearDrift):
        return SchemeId.AIS
    return SchemeId.SMS


def base_step_count(horizon_T: float, base_step: float) -> int:
    """Smallest step count whose step size does not exceed ``base_step``."""
    return max(1, math.ceil(horizon_T / base_step - STEP_COUNT_TOL))


class LadderConfig(BaseModel):
    model_config = ConfigDict(frozen=True)

    model: CevModel
    scheme_under_test: SchemeId = SchemeId.SMS
    reference_scheme: Optional[SchemeId] = None
    ladder_exponents: List[int] = Field(default_factory=lambda: list(range(1, 10)))
    reference_exponent: int = 12
    n_trajectories: PositiveInt = 50_000
    base_step: Optional[float] = Field(default=None, gt=0)
    seed: int = Field(default=0, ge=0)

    @model_validator(mode="after")
    def check_ladder(self) -> "LadderConfig":
        if any(n < 0 for n in self.ladder_exponents):
            raise ValueError("ladder exponents must be nonnegative")
        if self.ladder_exponents and self.reference_exponent <= max(self.ladder_exponents):
            raise ValueError(
                f"reference_exponent {self.reference_exponent} must exceed every ladder exponent"
            )
        constants = derive_constants(self.model)
        if self.base_step is None and not constants.is_defined:
            raise ValueError(
                "base_step is required when delta_max(alpha) is undefined for the model"
            )
        if (
            self.base_step is not None
            and constants.is_defined
            and self.base_step > constants.delta_max * (1 + STEP_COUNT_TOL)
        ):
            raise ValueError(
                f"base_step {self.base_step} exceeds delta_max {constants.delta_max}"
            )
        return self

    @property
    def reference(self) -> SchemeId:
        return self.reference_scheme or default_reference_scheme(self.model)

    @property
    def resolved_base_step(self) -> float:
        if self.base_step is not None:
            return self.base_step
        return derive_constants(self.model).delta_max

    @property
    def base_grid(self) -> GridSpec:
        return GridSpec(
            T=self.model.horizon_T,
            n_steps=base_step_count(self.model.horizon_T, self.resolved_base_step),
        )

    @property
    def reference_grid(self) -> GridSpec:
        return self.base_grid.refined(self.reference_exponent)

    def ladder_grid(self, exponent: int) -> GridSpec:
        return self.base_grid.refined(exponent)


@dataclass(frozen=True)
class StrongErrorPoint:
    dt: float
    mean_abs_error: float
    std_error: float


@dataclass(frozen=True)
class StrongErrorReport:
    scheme: SchemeId
    points: List[StrongErrorPoint]
    fit: LogLogFit

    @property
    def rho_hat(self) -> float:
        return self.fit.slope

    @property
    def intercept(self) -> float:
        return self.fit.intercept

    @property
    def r_squared(self) -> float:
        return self.fit.r_squared

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            [(p.dt, p.mean_abs_error, p.std_error) for p in self.points],
            columns=StrongErrorColumns.list_column_order(),
        )

    def summary_frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            [
                (
                    self.scheme.label,
                    self.rho_hat,
                    self.intercept,
                    self.r_squared,
                    self.fit.slope_std_error,
                )
            ],
            columns=RegressionColumns.list_column_order(),
        )


def coupled_terminal_errors(
    test_scheme: BaseScheme,
    reference_scheme: BaseScheme,
    increments: np.ndarray,
    dt: float,
    halvings: List[int],
    terminal_map: Optional[Callable[[np.ndarray], np.ndarray]] = None,
) -> np.ndarray:
    """|X_T^ref - X_T^test| for each row of ``increments`` and each coarsening.

    The reference runs on ``increments`` as given; the scheme under test runs
    on the same increments coarsened ``h`` times for each ``h`` in ``halvings``.
    ``terminal_map``, when given, is applied to both terminal values first.

    Returns:
        Array of shape ``(n_rows, len(halvings))``.
    """
    map_terminal = terminal_map or (lambda values: values)
    reference_T = map_terminal(reference_scheme.simulate_batch(increments, dt).terminal)
    errors = np.empty((increments.shape[0], len(halvings)))

    # coarsen progressively from the finest requested level
    order = sorted(range(len(halvings)), key=lambda i: halvings[i])
    current, current_halvings = increments, 0
    for column in order:
        current = coarsen_increments(current, halvings[column] - current_halvings)
        current_halvings = halvings[column]
        test_T = map_terminal(
            test_scheme.simulate_batch(current, dt * 2**current_halvings).terminal
        )
        errors[:, column] = np.abs(reference_T - test_T)
    return errors


class StrongErrorExperiment(Experiment):
    def __init__(self, cfg: LadderConfig, threads: Optional[int] = None) -> None:
        self.cfg = cfg
        self.threads = threads
        self.logger = structlog.get_logger(f"{__name__}.{type(self).__name__}")

    def run(self) -> pd.DataFrame:
        return self.estimate().to_frame()

    def coupled_errors(
        self,
        test_scheme: BaseScheme,
        reference_scheme: BaseScheme,
        increments: np.ndarray,
        dt: float,
        halvings: List[int],
    ) -> np.ndarray:
        return coupled_terminal_errors(
            test_scheme, reference_scheme, increments, dt, halvings
        )

    def estimate(self) -> StrongErrorReport:
        cfg = self.cfg
        exponents = sorted(set(cfg.ladder_exponents))
        if len(exponents) < MIN_LADDER_POINTS:
            raise InsufficientPoints(
                f"{len(exponents)} ladder points given, at least {MIN_LADDER_POINTS} required"
            )

        test_scheme = SchemeFactory.build_scheme(cfg.scheme_under_test, cfg.model)
        reference_scheme = SchemeFactory.build_scheme(cfg.reference, cfg.model)
        reference_grid = cfg.reference_grid
        halvings = [cfg.reference_exponent - n for n in exponents]

        self.logger.info(
            "strong_error_started",
            scheme=cfg.scheme_under_test.label,
            reference=cfg.reference.label,
            n_trajectories=cfg.n_trajectories,
            reference_steps=reference_grid.n_steps,
        )

        def work(chunk: TrajectoryChunk) -> np.ndarray:
            increments = generate_increments(
                reference_grid, cfg.seed, 0, chunk.start, chunk.count
            )
            return self.coupled_errors(
                test_scheme, reference_scheme, increments, reference_grid.dt, halvings
            )

        chunks = trajectory_chunks(0, cfg.n_trajectories, reference_grid.n_steps)
        errors = np.concatenate(run_chunks(work, chunks, self.threads), axis=0)

        points = []
        for column, exponent in enumerate(exponents):
            sample = errors[:, column]
            std_error = (
                float(sample.std(ddof=1) / math.sqrt(sample.size)) if sample.size > 1 else 0.0
            )
            point = StrongErrorPoint(
                dt=cfg.ladder_grid(exponent).dt,
                mean_abs_error=float(sample.mean()),
                std_error=std_error,
            )
            points.append(point)
            self.logger.debug(
                "ladder_level_completed",
                exponent=exponent,
                dt=point.dt,
                mean_abs_error=point.mean_abs_error,
            )

        fit = ols_loglog((p.dt, p.mean_abs_error) for p in points)
        self.logger.info(
            "strong_error_fitted",
            scheme=cfg.scheme_under_test.label,
            rho_hat=fit.slope,
            r_squared=fit.r_squared,
        )
        return StrongErrorReport(scheme=cfg.scheme_under_test, points=points, fit=fit)


def estimate_strong_error(cfg: LadderConfig, threads: Optional[int] = None) -> StrongErrorReport:
    return StrongErrorExperiment(cfg, threads=threads).estimate()


class ThreeHalvesLadderConfig(BaseModel):
    """Strong-error ladder for r = 1/v, with v simulated by the SMS.

    The reference is the SMS itself on the finest grid.
    """

    model_config = ConfigDict(frozen=True)

    model: ThreeHalvesModel
    ladder_exponents: List[int] = Field(default_factory=lambda: list(range(1, 8)))
    reference_exponent: int = 10
    n_trajectories: PositiveInt = 5_000
    base_step: Optional[float] = Field(default=None, gt=0)
    seed: int = Field(default=0, ge=0)

    def to_ladder_config(self) -> LadderConfig:
        return LadderConfig(
            model=self.model.reciprocal_model(),
            scheme_under_test=SchemeId.SMS,
            reference_scheme=SchemeId.SMS,
            ladder_exponents=self.ladder_exponents,
            reference_exponent=self.reference_exponent,
            n_trajectories=self.n_trajectories,
            base_step=self.base_step,
            seed=self.seed,
        )


class ThreeHalvesStrongErrorExperiment(StrongErrorExperiment):
    def __init__(self, cfg: ThreeHalvesLadderConfig, threads: Optional[int] = None) -> None:
        super().__init__(cfg.to_ladder_config(), threads=threads)

    def coupled_errors(
        self,
        test_scheme: BaseScheme,
        reference_scheme: BaseScheme,
        increments: np.ndarray,
        dt: float,
        halvings: List[int],
    ) -> np.ndarray:
        # v is driven by -W
        return coupled_terminal_errors(
            test_scheme,
            reference_scheme,
            -increments,
            dt,
            halvings,
            terminal_map=invert_states,
        )


def estimate_three_halves_strong_error(
    cfg: ThreeHalvesLadderConfig, threads: Optional[int] = None
) -> StrongErrorReport:
    return ThreeHalvesStrongErrorExperiment(cfg, threads=threads).estimate()
