import math
from dataclasses import dataclass, field
from typing import Dict, Optional

import structlog

from app.enums import CirRegime, DriftKind, SchemeId

from .cev import CevModel

logger = structlog.get_logger(__name__)


@dataclass(frozen=True)
class HypothesisReport:
    """Outcome of the parameter gates; it never blocks a simulation.

    Attributes:
        h1_ok: b(0) > 0 and the drift is Lipschitz with a nonnegative constant.
        h2_i_ok_for_p: Moment gate on b(0) for each requested order p.
        p_form_ok_for_p: The same gate written with 2p + 1 instead of 2(p v 2) + 1.
        h2_ii_assumed: True when the drift smoothness is asserted, not verified.
        notes: Human readable explanation of every failed gate.
    """

    h1_ok: bool
    h2_i_ok_for_p: Dict[float, bool]
    p_form_ok_for_p: Dict[float, bool]
    h2_ii_assumed: bool
    notes: str = ""
    thresholds: Dict[float, float] = field(default_factory=dict)

    @property
    def all_ok(self) -> bool:
        return self.h1_ok and all(self.h2_i_ok_for_p.values())


def moment_threshold(model: CevModel, p: float) -> float:
    """Smallest b(0) (exclusive) for which the moment gate holds at order p."""
    sigma2 = model.sigma**2
    if model.is_square_root:
        return 3 * (2 * max(p, 2) + 1) * sigma2 / 2
    return 2 * model.alpha * (1 - model.alpha) ** 2 * sigma2


def p_form_threshold(model: CevModel, p: float) -> float:
    sigma2 = model.sigma**2
    if model.is_square_root:
        return 3 * (2 * p + 1) * sigma2 / 2
    return 2 * model.alpha * (1 - model.alpha) ** 2 * sigma2


def check_hypotheses(model: CevModel, p: float = 1) -> HypothesisReport:
    if p < 1:
        raise ValueError(f"moment order p must be >= 1, got {p}")

    b0 = model.b0
    h1_ok = b0 > 0 and model.K >= 0
    threshold = moment_threshold(model, p)
    h2_i = b0 > threshold
    p_form_ok = b0 > p_form_threshold(model, p)
    h2_ii_assumed = model.drift.kind == DriftKind.Custom

    notes = []
    if not h1_ok:
        notes.append(f"b(0) = {b0} must be positive")
    if not h2_i:
        notes.append(f"b(0) = {b0} <= {threshold:.6g}: order-one rate not guaranteed for p = {p}")
    if h2_ii_assumed:
        notes.append("drift smoothness (C^2, polynomial growth of b'') is assumed")

    report = HypothesisReport(
        h1_ok=h1_ok,
        h2_i_ok_for_p={p: h2_i},
        p_form_ok_for_p={p: p_form_ok},
        h2_ii_assumed=h2_ii_assumed,
        notes="; ".join(notes),
        thresholds={p: threshold},
    )
    if not report.all_ok:
        logger.warning(
            "hypotheses_not_satisfied",
            alpha=model.alpha,
            b0=b0,
            sigma2=model.sigma**2,
            p=p,
            notes=report.notes,
        )
    return report


def cir_regime(model: CevModel) -> Optional[CirRegime]:
    """Classify b(0) against sigma^2 for the square-root case, None otherwise."""
    if not model.is_square_root:
        return None
    ratio = model.b0 / model.sigma**2
    if ratio > 6:
        return CirRegime.AboveSixSigma2
    if ratio > 2.5:
        return CirRegime.FiveHalvesToSix
    if ratio > 1.5:
        return CirRegime.ThreeHalvesToFiveHalves
    if ratio > 1:
        return CirRegime.OneToThreeHalves
    return CirRegime.BelowSigma2


def _ses_condition_holds(model: CevModel, p: float) -> bool:
    sigma2 = model.sigma**2
    q = max(p / 2, 1)
    script_k = max(model.K * (16 * q - 1), 4 * sigma2 * (8 * p - 1) ** 2)
    return model.b0 > (math.sqrt(8 / sigma2 * script_k) + 1) * sigma2 / 2


def theoretical_rate(scheme: SchemeId, model: CevModel, p: float = 1) -> Optional[float]:
    """Known L^p strong rate of a scheme for this model, None when undetermined."""
    sigma2 = model.sigma**2
    match scheme:
        case SchemeId.SMS | SchemeId.PMS:
            return 1.0 if model.b0 > moment_threshold(model, p) else None
        case SchemeId.AIS:
            if model.drift.kind != DriftKind.Linear:
                return None
            if not model.is_square_root:
                return 1.0
            if p >= 4 * model.b0 / (3 * sigma2):
                return None
            return 1.0 if model.b0 > max(1, 3 * p / 4) * sigma2 else None
        case SchemeId.SES:
            if not model.is_square_root:
                return 0.5
            return 0.5 if _ses_condition_holds(model, p) else None
        case _:
            raise NotImplementedError(f"Scheme {scheme} has not been yet implemented")
