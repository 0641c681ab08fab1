from dataclasses import dataclass
from typing import Any, Optional

import numpy as np
import pandas as pd

from app.enums import PathColumns
from app.paths import GridSpec


@dataclass(frozen=True)
class StepOutcome:
    """Result of one step; fields are scalars or arrays of matching shape.

    Attributes:
        next_state: State after symmetrization or projection, always >= 0.
        pre_reflection_z: Raw increment value before the sign correction.
        reflected: True iff ``pre_reflection_z <= 0``.
    """

    next_state: Any
    pre_reflection_z: Any
    reflected: Any


@dataclass(frozen=True)
class SchemePath:
    grid: GridSpec
    states: np.ndarray
    reflect_count: int
    integral_trapezoid: float

    @classmethod
    def from_states(
        cls, grid: GridSpec, states: np.ndarray, reflect_count: int = 0
    ) -> "SchemePath":
        states = np.asarray(states, dtype=np.float64)
        if states.shape != (grid.n_steps + 1,):
            raise ValueError(
                f"expected {grid.n_steps + 1} states, got shape {states.shape}"
            )
        return cls(
            grid=grid,
            states=states,
            reflect_count=reflect_count,
            integral_trapezoid=float(np.trapezoid(states, dx=grid.dt)),
        )

    @property
    def terminal(self) -> float:
        return float(self.states[-1])

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            {
                PathColumns.Step: np.arange(self.grid.n_steps + 1),
                PathColumns.Time: self.grid.times(),
                PathColumns.State: self.states,
            }
        )[PathColumns.list_column_order()]


@dataclass(frozen=True)
class BatchPaths:
    """Per-trajectory results of folding a scheme over a block of increments.

    Attributes:
        terminal: X at the final grid time, shape ``(n,)``.
        integral: Trapezoidal integral of each path over ``[0, T]``.
        reflect_count: Number of reflected steps per trajectory.
        states: Full paths, shape ``(n, N + 1)``, only when requested.
    """

    terminal: np.ndarray
    integral: np.ndarray
    reflect_count: np.ndarray
    states: Optional[np.ndarray] = None
