from typing import Any

import numpy as np

from app.enums import DriftKind, SchemeId
from app.errors import UnsupportedParameters
from app.model import CevModel, LinearDrift

from .base import BaseScheme
from .outcome import StepOutcome


class DriftImplicitSquareRoot(BaseScheme):
    """Drift-implicit Euler step on Y = sqrt(X) for the square-root model.

    With b(x) = a - b x the implicit equation in Y_next is the quadratic

        (1 + b dt / 2) Y^2 - (sqrt(x) + sigma dW / 2) Y - (a - sigma^2 / 4) dt / 2 = 0

    and the step keeps its positive root. It is explicit only for alpha = 1/2
    and requires 4a > sigma^2, which makes the constant term negative.
    """

    scheme_id = SchemeId.AIS

    def __init__(self, model: CevModel) -> None:
        if not model.is_square_root:
            raise UnsupportedParameters(
                f"AIS is explicit only for alpha = 0.5, got alpha = {model.alpha}"
            )
        if model.drift.kind != DriftKind.Linear:
            raise UnsupportedParameters("AIS requires a linear drift a - b x")
        assert isinstance(model.drift, LinearDrift)
        if 4 * model.drift.a <= model.sigma**2:
            raise UnsupportedParameters(
                f"AIS requires 4a > sigma^2, got a = {model.drift.a}, sigma^2 = {model.sigma**2}"
            )
        super().__init__(model)
        self._a = model.drift.a
        self._b = model.drift.b

    def step(self, dt: float, x: Any, dW: Any) -> StepOutcome:
        if dt <= 0:
            raise ValueError(f"dt must be positive, got {dt}")
        damping = 1 + self._b * dt / 2
        if damping <= 0:
            raise UnsupportedParameters(
                f"AIS requires 1 + b dt / 2 > 0, got b = {self._b}, dt = {dt}"
            )
        sigma = self.model.sigma
        linear = np.sqrt(x) + sigma * dW / 2
        constant = (self._a - sigma**2 / 4) * dt / 2
        root = np.sqrt(linear * linear + 4 * damping * constant)
        # root > |linear|, so the second form never cancels
        y_next = np.where(
            linear >= 0,
            (linear + root) / (2 * damping),
            2 * constant / (root - linear),
        )[()]
        x_next = y_next * y_next
        return StepOutcome(
            next_state=x_next,
            pre_reflection_z=x_next,
            reflected=np.zeros_like(x_next, dtype=bool),
        )
