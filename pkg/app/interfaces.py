from abc import ABC, abstractmethod
from typing import TYPE_CHECKING, Any

import pandas as pd

if TYPE_CHECKING:
    from app.schemes.outcome import StepOutcome


class Drift(ABC):
    @property
    @abstractmethod
    def lipschitz_K(self) -> float: ...

    @property
    @abstractmethod
    def b_at_zero(self) -> float: ...

    @abstractmethod
    def evaluate(self, x: Any) -> Any: ...


class StepScheme(ABC):
    @abstractmethod
    def step(self, dt: float, x: Any, dW: Any) -> "StepOutcome": ...


class Experiment(ABC):
    @abstractmethod
    def run(self) -> pd.DataFrame: ...
