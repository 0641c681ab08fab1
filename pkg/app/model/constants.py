import math
from dataclasses import dataclass
from typing import Optional

from app.errors import NonPositiveBSigma

from .cev import CevModel

# below this |2 alpha - 1| the alpha = 1/2 limits are substituted
ALPHA_HALF_TOL = 1e-8


def b_sigma(b0: float, sigma: float, alpha: float) -> float:
    if abs(2 * alpha - 1) < ALPHA_HALF_TOL:
        return b0 - sigma**2 / 4
    return b0 - 2 * (1 - alpha) ** 2 * alpha * sigma**2


def k_alpha(K: float, sigma: float, alpha: float) -> float:
    two_alpha_minus_one = 2 * alpha - 1
    if abs(two_alpha_minus_one) < ALPHA_HALF_TOL:
        return K
    base = 2 * (1 - alpha)
    power = math.exp(-2 * (1 - alpha) / two_alpha_minus_one * math.log(base))
    return K + alpha * sigma**2 / 2 * two_alpha_minus_one * power


@dataclass(frozen=True)
class DerivedConstants:
    """Constants derived from a model: b_sigma(alpha), K(alpha), x_bar(alpha), delta_max(alpha).

    ``x_bar_alpha`` and ``delta_max`` exist only when ``b_sigma_alpha > 0``;
    reading them otherwise raises ``NonPositiveBSigma``.
    """

    b_sigma_alpha: float
    k_alpha: float
    _x_bar_alpha: Optional[float] = None
    _delta_max: Optional[float] = None

    @property
    def is_defined(self) -> bool:
        return self.b_sigma_alpha > 0

    @property
    def x_bar_alpha(self) -> float:
        if self._x_bar_alpha is None:
            raise NonPositiveBSigma(
                f"b_sigma(alpha) = {self.b_sigma_alpha} <= 0; x_bar(alpha) is undefined"
            )
        return self._x_bar_alpha

    @property
    def delta_max(self) -> float:
        if self._delta_max is None:
            raise NonPositiveBSigma(
                f"b_sigma(alpha) = {self.b_sigma_alpha} <= 0; delta_max(alpha) is undefined"
            )
        return self._delta_max


def lipschitz_step_bound(model: CevModel) -> float:
    """The part of delta_max(alpha) that does not involve b_sigma(alpha)."""
    if abs(2 * model.alpha - 1) < ALPHA_HALF_TOL:
        return min(1 / (4 * model.K), model.x0) if model.K > 0 else model.x0
    return 1 / (4 * model.alpha * k_alpha(model.K, model.sigma, model.alpha))


def base_step_bound(model: CevModel) -> float:
    """delta_max(alpha), or its Lipschitz part when b_sigma(alpha) <= 0."""
    constants = derive_constants(model)
    if constants.is_defined:
        return constants.delta_max
    return lipschitz_step_bound(model)


def derive_constants(model: CevModel) -> DerivedConstants:
    alpha = model.alpha
    bs = b_sigma(model.b0, model.sigma, alpha)
    ka = k_alpha(model.K, model.sigma, alpha)
    if bs <= 0:
        return DerivedConstants(b_sigma_alpha=bs, k_alpha=ka)

    reflection_bound = model.x0 / ((1 - math.sqrt(alpha)) * bs)
    lipschitz_bound = lipschitz_step_bound(model)

    return DerivedConstants(
        b_sigma_alpha=bs,
        k_alpha=ka,
        _x_bar_alpha=bs / ka if ka > 0 else math.inf,
        _delta_max=min(reflection_bound, lipschitz_bound),
    )
