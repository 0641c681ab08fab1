from dataclasses import dataclass
from typing import Iterable, Tuple

import numpy as np
from scipy import stats

from app.errors import DegenerateRegression, InsufficientPoints


@dataclass(frozen=True)
class LogLogFit:
    slope: float
    intercept: float
    r_squared: float
    slope_std_error: float

    def __iter__(self):
        # unpacks as (slope, intercept, r_squared)
        return iter((self.slope, self.intercept, self.r_squared))


def ols_loglog(points: Iterable[Tuple[float, float]]) -> LogLogFit:
    """Unweighted least squares of ``log err`` on ``log dt``.

    Args:
        points: Pairs ``(dt, err)`` with both entries positive.

    Returns:
        The fitted slope, intercept, coefficient of determination and the
        standard error of the slope.

    Raises:
        InsufficientPoints: If fewer than two points are given.
        DegenerateRegression: If a value is not positive or every ``dt`` is the same.
    """
    pairs = np.asarray(list(points), dtype=np.float64)
    if pairs.ndim != 2 or pairs.shape[0] < 2:
        raise InsufficientPoints("at least two (dt, err) points are required")
    dts, errs = pairs[:, 0], pairs[:, 1]
    if np.any(dts <= 0) or np.any(errs <= 0):
        raise DegenerateRegression("dt and err must be positive for a log-log fit")
    if np.all(dts == dts[0]):
        raise DegenerateRegression("all dt values are equal")

    result = stats.linregress(np.log(dts), np.log(errs))
    return LogLogFit(
        slope=float(result.slope),
        intercept=float(result.intercept),
        r_squared=float(result.rvalue**2),
        slope_std_error=float(result.stderr),
    )
