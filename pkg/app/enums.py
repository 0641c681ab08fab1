from enum import StrEnum
from typing import List


class SchemeId(StrEnum):
    SMS = "sms"
    PMS = "pms"
    SES = "ses"
    AIS = "ais"

    @property
    def label(self) -> str:
        return self.value.upper()


class DriftKind(StrEnum):
    Linear = "linear"
    Custom = "custom"


class Scale(StrEnum):
    Full = "full"
    Desk = "desk"


class Command(StrEnum):
    StrongError = "strong-error"
    Diagnostics = "diagnostics"
    Table = "table"
    Mlmc = "mlmc"
    PathDump = "path-dump"


class CirRegime(StrEnum):
    """Parameter cases of the square-root model, ordered by b(0)/sigma^2."""

    AboveSixSigma2 = "b0>6s2"
    FiveHalvesToSix = "5s2/2<b0<6s2"
    ThreeHalvesToFiveHalves = "3s2/2<b0<5s2/2"
    OneToThreeHalves = "s2<b0<3s2/2"
    BelowSigma2 = "b0<s2"


class StrongErrorColumns(StrEnum):
    Dt = "dt"
    MeanAbsError = "mean_abs_error"
    StdError = "std_error"

    @classmethod
    def list_column_order(cls) -> List["StrongErrorColumns"]:
        return [cls.Dt, cls.MeanAbsError, cls.StdError]


class RegressionColumns(StrEnum):
    Scheme = "scheme"
    RhoHat = "rho_hat"
    Intercept = "intercept"
    RSquared = "r_squared"
    SlopeStdError = "slope_std_error"

    @classmethod
    def list_column_order(cls) -> List["RegressionColumns"]:
        return [cls.Scheme, cls.RhoHat, cls.Intercept, cls.RSquared, cls.SlopeStdError]


class TableColumns(StrEnum):
    Table = "table"
    Alpha = "alpha"
    Sigma2 = "sigma2"
    Regime = "regime"
    Scheme = "scheme"
    RhoHat = "rho_hat"
    RSquared = "r_squared"
    SlopeStdError = "slope_std_error"
    Theory = "theoretical_rate"

    @classmethod
    def list_column_order(cls) -> List["TableColumns"]:
        return [
            cls.Table,
            cls.Alpha,
            cls.Sigma2,
            cls.Regime,
            cls.Scheme,
            cls.RhoHat,
            cls.RSquared,
            cls.SlopeStdError,
            cls.Theory,
        ]


class MlmcColumns(StrEnum):
    Level = "level"
    Dt = "dt"
    Samples = "N_l"
    Variance = "V_l"
    MeanCorrection = "mean_correction"

    @classmethod
    def list_column_order(cls) -> List["MlmcColumns"]:
        return [cls.Level, cls.Dt, cls.Samples, cls.Variance, cls.MeanCorrection]


class MlmcSummaryColumns(StrEnum):
    Epsilon = "epsilon"
    Estimator = "estimator"
    ClosedForm = "closed_form"
    ObservedError = "observed_error"
    TotalFineSteps = "total_fine_steps"
    Seconds = "seconds"

    @classmethod
    def list_column_order(cls, with_timing: bool = False) -> List["MlmcSummaryColumns"]:
        """CSV columns; ``seconds`` only appears in the printed summary."""
        columns = [
            cls.Epsilon,
            cls.Estimator,
            cls.ClosedForm,
            cls.ObservedError,
            cls.TotalFineSteps,
        ]
        return columns + [cls.Seconds] if with_timing else columns


class PathColumns(StrEnum):
    Step = "step"
    Time = "time"
    State = "state"

    @classmethod
    def list_column_order(cls) -> List["PathColumns"]:
        return [cls.Step, cls.Time, cls.State]


class DiagnosticsColumns(StrEnum):
    Dt = "dt"
    SignFlipFrequency = "sign_flip_frequency"
    DivergenceFrequency = "pms_sms_divergence_frequency"
    LocalErrorRms = "local_error_rms"
    CorrectedLocalErrorRms = "corrected_local_error_rms"

    @classmethod
    def list_column_order(cls) -> List["DiagnosticsColumns"]:
        return [
            cls.Dt,
            cls.LocalErrorRms,
            cls.CorrectedLocalErrorRms,
            cls.SignFlipFrequency,
            cls.DivergenceFrequency,
        ]
