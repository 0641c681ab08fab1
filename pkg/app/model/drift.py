"""Drift coefficients b(x) of the CEV-like SDE.

Two kinds are supported: the linear drift ``b(x) = a - b x`` used by every
experiment, and a user supplied evaluator carrying declared Lipschitz constant
and value at zero. Evaluators must accept numpy arrays (ufunc style), since the
path simulators evaluate the drift on a whole block of trajectories at once.
"""

import math
from typing import Annotated, Any, Callable, Literal

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from app.errors import InvalidModel
from app.interfaces import Drift

EVALUATOR_ZERO_RTOL = 1e-12


class LinearDrift(BaseModel, Drift):
    model_config = ConfigDict(frozen=True, extra="forbid")

    kind: Literal["linear"] = "linear"
    a: float = Field(gt=0, description="drift level per unit time, b(0)")
    b: float = Field(description="mean-reversion rate per unit time")

    @property
    def lipschitz_K(self) -> float:
        return abs(self.b)

    @property
    def b_at_zero(self) -> float:
        return self.a

    def evaluate(self, x: Any) -> Any:
        return self.a - self.b * x


class CustomDrift(BaseModel, Drift):
    model_config = ConfigDict(frozen=True, extra="forbid", arbitrary_types_allowed=True)

    kind: Literal["custom"] = "custom"
    evaluator: Callable[[Any], Any]
    declared_K: float = Field(ge=0, alias="lipschitz_K")
    declared_b0: float = Field(gt=0, alias="b_at_zero")

    @model_validator(mode="after")
    def check_evaluator_at_zero(self) -> "CustomDrift":
        at_zero = float(self.evaluator(0.0))
        if not math.isclose(at_zero, self.declared_b0, rel_tol=EVALUATOR_ZERO_RTOL):
            raise InvalidModel(
                f"evaluator(0) = {at_zero} does not match declared b_at_zero = {self.declared_b0}"
            )
        return self

    @property
    def lipschitz_K(self) -> float:
        return self.declared_K

    @property
    def b_at_zero(self) -> float:
        return self.declared_b0

    def evaluate(self, x: Any) -> Any:
        return self.evaluator(x)


type DriftSpec = Annotated[LinearDrift | CustomDrift, Field(discriminator="kind")]


def drift_eval(drift: Drift, x: Any) -> Any:
    """Evaluate b(x) for a scalar or an array of nonnegative states."""
    if np.any(np.asarray(x) < 0):
        raise ValueError("drift is evaluated on nonnegative states only")
    return drift.evaluate(x)
