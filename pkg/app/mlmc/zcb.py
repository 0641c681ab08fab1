"""Zero-coupon bond under the square-root short-rate model."""

import math

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from app.model import CevModel, LinearDrift
from app.schemes import SchemePath


class ZcbModel(BaseModel):
    """dr = (a - b r) dt + sigma sqrt(r) dW, priced at maturity ``T``."""

    model_config = ConfigDict(frozen=True, populate_by_name=True, extra="forbid")

    a: float = Field(default=10.0, gt=0)
    b: float = Field(default=10.0, gt=0)
    sigma: float = Field(default=1.0, gt=0)
    r0: float = Field(default=1.0, gt=0)
    horizon_T: float = Field(default=1.0, gt=0, alias="T")

    def to_cev_model(self) -> CevModel:
        return CevModel(
            x0=self.r0,
            sigma=self.sigma,
            alpha=0.5,
            drift=LinearDrift(a=self.a, b=self.b),
            T=self.horizon_T,
        )


def zcb_closed_form(m: ZcbModel) -> float:
    """B(0, T) = A(T) exp(-B(T) r0).

    ``log A`` is assembled from ``d = lambda - b = 2 sigma^2 / (lambda + b)``
    so that it stays accurate as sigma goes to zero, where ``2a / sigma^2``
    multiplies a bracket of order sigma^2.
    """
    lam = math.sqrt(m.b**2 + 2 * m.sigma**2)
    d = 2 * m.sigma**2 / (lam + m.b)
    T = m.horizon_T
    bracket = -d * T / 2 - math.log1p(d * math.expm1(-lam * T) / (2 * lam))
    log_A = 2 * m.a / m.sigma**2 * bracket
    # written in exp(-lambda T) so long maturities cannot overflow
    decay = math.exp(-lam * T)
    shrink = -math.expm1(-lam * T)
    B = 2 * shrink / ((lam + m.b) * shrink + 2 * lam * decay)
    return math.exp(log_A - B * m.r0)


def discounted_payoff(path: SchemePath) -> float:
    return math.exp(-path.integral_trapezoid)


def discounted_payoffs(integrals: np.ndarray) -> np.ndarray:
    return np.exp(-integrals)
