"""Extended Mittag-Leffler functions, their kernels, and verification tools."""

from .errors import (
    AccuracyLossError,
    ConvergenceError,
    DomainError,
    EvaluationError,
    ExtMlError,
    PoleError,
)
from .extbeta import (
    ExtendedBetaArgs,
    ExtendedBetaSequence,
    chaudhry_beta,
    extended_beta,
    extended_gamma,
    extended_gamma_closed_form,
)
from .fractional import FracOrder, check_theorem_3_1, rl_derivative, rl_extended, rl_further_extended
from .mellin import MellinPoint, check_mellin, mellin_closed_form, mellin_numeric
from .mittag import (
    CheckReport,
    ExtendedMLParams,
    check_recurrence,
    claim_check_theorem_3_2,
    claim_check_theorem_3_3,
    ml_classic,
    ml_ext_derivative,
    ml_ext_integral,
    ml_ext_integral_semiinf,
    ml_ext_integral_trig,
    ml_ext_power_derivative,
    ml_ext_series,
    ml_extended_oy,
    ml_prabhakar,
    ml_shukla,
    ml_two_param,
)
from .quadrature import (
    QuadratureOptions,
    QuadratureResult,
    integrate_finite,
    integrate_semi_infinite,
)
from .special import (
    SeriesControl,
    WrightSeriesSpec,
    beta,
    kummer_1f1,
    log_gamma,
    pochhammer,
    pochhammer_real,
    wright_psi,
)

__version__ = "0.1.0"

__all__ = [
    "AccuracyLossError",
    "CheckReport",
    "ConvergenceError",
    "DomainError",
    "EvaluationError",
    "ExtMlError",
    "ExtendedBetaArgs",
    "ExtendedBetaSequence",
    "ExtendedMLParams",
    "FracOrder",
    "MellinPoint",
    "PoleError",
    "QuadratureOptions",
    "QuadratureResult",
    "SeriesControl",
    "WrightSeriesSpec",
    "beta",
    "chaudhry_beta",
    "check_mellin",
    "check_recurrence",
    "check_theorem_3_1",
    "claim_check_theorem_3_2",
    "claim_check_theorem_3_3",
    "extended_beta",
    "extended_gamma",
    "extended_gamma_closed_form",
    "integrate_finite",
    "integrate_semi_infinite",
    "kummer_1f1",
    "log_gamma",
    "mellin_closed_form",
    "mellin_numeric",
    "ml_classic",
    "ml_ext_derivative",
    "ml_ext_integral",
    "ml_ext_integral_semiinf",
    "ml_ext_integral_trig",
    "ml_ext_power_derivative",
    "ml_ext_series",
    "ml_extended_oy",
    "ml_prabhakar",
    "ml_shukla",
    "ml_two_param",
    "pochhammer",
    "pochhammer_real",
    "rl_derivative",
    "rl_extended",
    "rl_further_extended",
    "wright_psi",
]
