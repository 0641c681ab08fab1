class CevSimError(Exception):
    """Base class for every error raised by the simulation library."""


class ConfigError(CevSimError, ValueError):
    """Configuration could not be loaded or is inconsistent."""


class InvalidModel(CevSimError, ValueError):
    """Model parameters violate the model invariants."""


class NonPositiveBSigma(CevSimError, ValueError):
    """b_sigma(alpha) <= 0, so x_bar(alpha) and delta_max(alpha) are undefined."""


class OddStepCount(CevSimError, ValueError):
    pass


class IndivisibleStepCount(CevSimError, ValueError):
    pass


class UnsupportedParameters(CevSimError, ValueError):
    """The requested scheme cannot be applied to the model."""


class ZeroStateInversion(CevSimError, ArithmeticError):
    """A transformed path hit exactly zero and cannot be inverted."""


class InsufficientPoints(CevSimError, ValueError):
    pass


class DegenerateRegression(CevSimError, ValueError):
    pass
