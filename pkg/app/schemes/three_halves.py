"""The 3/2 short-rate model through the reciprocal transform.

For dr = c1 r (c2 - r) dt + c3 r^(3/2) dW, the process v = 1/r solves

    dv = (c1 + c3^2 - c1 c2 v) dt + c3 sqrt(v) dB,   B = -W,

a square-root model with linear drift. It is simulated with the SMS on the
negated increments and mapped back pathwise by r = 1/v.
"""

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from app.enums import SchemeId
from app.errors import ZeroStateInversion
from app.model import CevModel, LinearDrift
from app.paths import BrownianGrid

from .factory import SchemeFactory
from .outcome import SchemePath


class ThreeHalvesModel(BaseModel):
    model_config = ConfigDict(frozen=True, populate_by_name=True)

    c1: float = Field(gt=0)
    c2: float = Field(gt=0)
    c3: float = Field(gt=0)
    r0: float = Field(gt=0)
    horizon_T: float = Field(default=1.0, gt=0, alias="T")

    def reciprocal_model(self) -> CevModel:
        return CevModel(
            x0=1 / self.r0,
            sigma=self.c3,
            alpha=0.5,
            drift=LinearDrift(a=self.c1 + self.c3**2, b=self.c1 * self.c2),
            T=self.horizon_T,
        )


def invert_states(states: np.ndarray) -> np.ndarray:
    """r = 1/v, refusing states that are exactly zero."""
    if np.any(states == 0):
        raise ZeroStateInversion("reciprocal path hit exactly 0 and cannot be inverted")
    return 1 / states


def simulate_three_halves_batch(
    model_32: ThreeHalvesModel, increments: np.ndarray, dt: float
) -> np.ndarray:
    """Paths of r = 1/v for a block of increments, shape ``(n, N + 1)``."""
    scheme = SchemeFactory.build_scheme(SchemeId.SMS, model_32.reciprocal_model())
    batch = scheme.simulate_batch(-increments, dt, record_states=True)
    assert batch.states is not None
    return invert_states(batch.states)


def simulate_three_halves(model_32: ThreeHalvesModel, brownian: BrownianGrid) -> SchemePath:
    states = simulate_three_halves_batch(
        model_32, brownian.increments[np.newaxis, :], brownian.dt
    )[0]
    return SchemePath.from_states(brownian.spec, states)
