from typing import Any

import numpy as np

from app.enums import SchemeId
from app.model import CevModel
from app.paths import BrownianGrid

from .factory import SchemeFactory
from .outcome import SchemePath, StepOutcome


def sms_step(model: CevModel, dt: float, x: Any, dW: Any) -> StepOutcome:
    return SchemeFactory.build_scheme(SchemeId.SMS, model).step(dt, x, dW)


def pms_step(model: CevModel, dt: float, x: Any, dW: Any) -> StepOutcome:
    return SchemeFactory.build_scheme(SchemeId.PMS, model).step(dt, x, dW)


def ses_step(model: CevModel, dt: float, x: Any, dW: Any) -> StepOutcome:
    return SchemeFactory.build_scheme(SchemeId.SES, model).step(dt, x, dW)


def ais_step(model: CevModel, dt: float, x: Any, dW: Any) -> StepOutcome:
    return SchemeFactory.build_scheme(SchemeId.AIS, model).step(dt, x, dW)


def simulate_path(scheme: SchemeId, model: CevModel, brownian: BrownianGrid) -> SchemePath:
    """Simulate one trajectory of ``scheme`` on the grid points of ``brownian``."""
    if not np.isclose(brownian.spec.horizon_T, model.horizon_T, rtol=1e-12):
        raise ValueError(
            f"grid horizon {brownian.spec.horizon_T} differs from model horizon {model.horizon_T}"
        )
    batch = SchemeFactory.build_scheme(scheme, model).simulate_batch(
        brownian.increments[np.newaxis, :], brownian.dt, record_states=True
    )
    assert batch.states is not None
    return SchemePath(
        grid=brownian.spec,
        states=batch.states[0],
        reflect_count=int(batch.reflect_count[0]),
        integral_trapezoid=float(batch.integral[0]),
    )
