from typing import Any

import numpy as np
import structlog

from app.enums import SchemeId
from app.interfaces import StepScheme
from app.model import CevModel

from .outcome import BatchPaths, StepOutcome


class BaseScheme(StepScheme):
    """Explicit one-step scheme for dX = b(X) dt + sigma X^alpha dW.

    Subclasses choose how the raw increment ``z`` is built and how it is
    mapped back to the nonnegative half-line. Every method accepts scalars or
    numpy arrays of states and increments, so a block of trajectories is
    advanced with one call per time step.

    Power convention: ``x ** 0 == 1`` for every ``x >= 0`` (including zero) and
    ``0 ** e == 0`` for ``e > 0``; numpy's ``power`` already follows it.
    """

    scheme_id: SchemeId

    def __init__(self, model: CevModel) -> None:
        self.model = model
        self.logger = structlog.get_logger(f"{__name__}.{type(self).__name__}")
        self._half_alpha_sigma2 = model.alpha * model.sigma**2 / 2

    def diffusion(self, x: Any) -> Any:
        if self.model.is_square_root:
            return self.model.sigma * np.sqrt(x)
        return self.model.sigma * np.power(x, self.model.alpha)

    def milstein_coefficient(self, x: Any) -> Any:
        """(alpha sigma^2 / 2) x^(2 alpha - 1): constant sigma^2 / 4 when alpha = 1/2."""
        if self.model.is_square_root:
            return self._half_alpha_sigma2 + np.zeros_like(x, dtype=np.float64)
        return self._half_alpha_sigma2 * np.power(x, 2 * self.model.alpha - 1)

    def euler_increment(self, dt: float, x: Any, dW: Any) -> Any:
        return x + self.model.drift.evaluate(x) * dt + self.diffusion(x) * dW

    def milstein_increment(self, dt: float, x: Any, dW: Any) -> Any:
        return self.euler_increment(dt, x, dW) + self.milstein_coefficient(x) * (
            dW * dW - dt
        )

    def raw_increment(self, dt: float, x: Any, dW: Any) -> Any:
        return self.milstein_increment(dt, x, dW)

    def project(self, z: Any) -> Any:
        return np.abs(z)

    def step(self, dt: float, x: Any, dW: Any) -> StepOutcome:
        if dt <= 0:
            raise ValueError(f"dt must be positive, got {dt}")
        z = self.raw_increment(dt, x, dW)
        return StepOutcome(
            next_state=self.project(z),
            pre_reflection_z=z,
            reflected=z <= 0,
        )

    def simulate_batch(
        self,
        increments: np.ndarray,
        dt: float,
        record_states: bool = False,
    ) -> BatchPaths:
        """Fold the step over increments of shape ``(n, N)`` starting from x0."""
        n_paths, n_steps = increments.shape
        x = np.full(n_paths, self.model.x0)
        integral = np.zeros(n_paths)
        reflect_count = np.zeros(n_paths, dtype=np.int64)
        states = None
        if record_states:
            states = np.empty((n_paths, n_steps + 1))
            states[:, 0] = x

        for k in range(n_steps):
            outcome = self.step(dt, x, increments[:, k])
            x_next = outcome.next_state
            integral += 0.5 * dt * (x + x_next)
            reflect_count += outcome.reflected
            x = x_next
            if states is not None:
                states[:, k + 1] = x

        return BatchPaths(
            terminal=x,
            integral=integral,
            reflect_count=reflect_count,
            states=states,
        )
