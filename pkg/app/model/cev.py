from pydantic import BaseModel, ConfigDict, Field

from .drift import DriftSpec


class CevModel(BaseModel):
    """Parameters of dX = b(X) dt + sigma |X|^alpha dW, X_0 = x0 on [0, T]."""

    model_config = ConfigDict(frozen=True, extra="forbid", populate_by_name=True)

    x0: float = Field(gt=0)
    sigma: float = Field(gt=0)
    alpha: float = Field(ge=0.5, lt=1)
    drift: DriftSpec
    horizon_T: float = Field(gt=0, alias="T")

    @property
    def b0(self) -> float:
        return self.drift.b_at_zero

    @property
    def K(self) -> float:
        return self.drift.lipschitz_K

    @property
    def is_square_root(self) -> bool:
        return self.alpha == 0.5
