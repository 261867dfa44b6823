"""The Mittag-Leffler function family.

Series evaluations for the classical one- and two-parameter functions, the
Prabhakar and Shukla-Prajapati generalizations, the extended function with
exponential beta kernel, and the further extension

    E(z; p) = sum_n  B_p^{lam,rho}(gamma+n, c-gamma) / B(gamma, c-gamma)
              * (c)_n z^n / (Gamma(alpha n + beta) n!)

together with three equivalent integral representations, term-wise
derivatives, the beta-shift recurrence check, and numeric claim-checkers
for the two stated derivative formulas (which evaluate both sides and
report the gap without asserting either identity).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, replace
from typing import Iterator

import numpy as np

from .errors import AccuracyLossError, ConvergenceError, DomainError, EvaluationError
from .extbeta import ExtendedBetaSequence
from .quadrature import (
    DEFAULT_QUADRATURE,
    QuadratureOptions,
    _exp_sinh,
    _tanh_sinh,
    require_converged,
)
from .special import (
    DEFAULT_SERIES,
    SeriesControl,
    _gammasgn,
    _kummer_vec,
    _log_abs_gamma,
    beta,
    pochhammer,
)

__all__ = [
    "ExtendedMLParams",
    "CheckReport",
    "ml_classic",
    "ml_two_param",
    "ml_prabhakar",
    "ml_shukla",
    "ml_extended_oy",
    "ml_ext_series",
    "ml_ext_integral",
    "ml_ext_integral_semiinf",
    "ml_ext_integral_trig",
    "ml_ext_derivative",
    "ml_ext_power_derivative",
    "check_recurrence",
    "claim_check_theorem_3_2",
    "claim_check_theorem_3_3",
]

_TINY = 1e-300


@dataclass(frozen=True)
class ExtendedMLParams:
    """Full parameter tuple (alpha, beta, gamma, c, lam, rho, p)."""

    alpha: float
    beta: float
    gamma: float
    c: float
    lam: float
    rho: float
    p: float = 0.0

    def __post_init__(self):
        if not (self.alpha > 0.0 and self.beta > 0.0):
            raise DomainError(
                f"series exponents must be positive, got alpha={self.alpha}, beta={self.beta}"
            )
        if not (self.c > self.gamma > 0.0):
            raise DomainError(f"requires c > gamma > 0, got gamma={self.gamma}, c={self.c}")
        if not (self.lam > 0.0 and self.rho > 0.0):
            raise DomainError(
                f"kernel parameters must be positive, got lam={self.lam}, rho={self.rho}"
            )
        if self.p < 0.0:
            raise DomainError(f"extension parameter p must be >= 0, got {self.p}")


@dataclass(frozen=True)
class CheckReport:
    """Two-sided identity check: values, gaps and the pass/fail verdict."""

    lhs: float
    rhs: float
    abs_gap: float
    rel_gap: float
    tol: float
    passed: bool

    @classmethod
    def from_values(cls, lhs: float, rhs: float, tol: float) -> "CheckReport":
        abs_gap = abs(lhs - rhs)
        rel_gap = abs_gap / max(abs(lhs), abs(rhs), _TINY)
        return cls(lhs, rhs, abs_gap, rel_gap, tol, rel_gap <= tol)


# --------------------------------------------------------------------------
# series machinery
# --------------------------------------------------------------------------


def _sum_terms(terms: Iterator[float], ctl: SeriesControl, what: str) -> float:
    s = 0.0
    small = 0
    it = iter(terms)
    for n in range(ctl.n_max):
        try:
            term = next(it)
        except OverflowError:
            raise ConvergenceError(f"{what} diverged: term overflow at n={n}", partial=s) from None
        if not math.isfinite(term):
            raise ConvergenceError(f"{what} diverged: non-finite term at n={n}", partial=s)
        s += term
        if abs(term) <= ctl.rel_tol * max(abs(s), _TINY):
            small += 1
            if small >= ctl.consecutive_small:
                return s
        else:
            small = 0
    raise ConvergenceError(f"{what} did not converge within {ctl.n_max} terms", partial=s)


def _seq_value(seq: ExtendedBetaSequence, n: int) -> float:
    try:
        return seq.value(n)
    except (ConvergenceError, EvaluationError, AccuracyLossError) as exc:
        raise type(exc)(f"extended-beta coefficient failed at series term n={n}: {exc}") from exc


def ml_classic(rho: float, z: float, ctl: SeriesControl = DEFAULT_SERIES) -> float:
    """One-parameter Mittag-Leffler sum_n z^n / Gamma(rho n + 1)."""
    if not rho > 0.0:
        raise DomainError(f"requires rho > 0, got {rho}")
    if z == 0.0:
        return 1.0
    lz = math.log(abs(z))
    sz = math.copysign(1.0, z)

    def terms():
        sgn = 1.0
        for n in itertools.count():
            yield sgn * math.exp(n * lz - math.lgamma(rho * n + 1.0))
            sgn *= sz

    return _sum_terms(terms(), ctl, "Mittag-Leffler series")


def ml_two_param(rho: float, sigma: float, z: float, ctl: SeriesControl = DEFAULT_SERIES) -> float:
    """Two-parameter Mittag-Leffler sum_n z^n / Gamma(rho n + sigma)."""
    if not (rho > 0.0 and sigma > 0.0):
        raise DomainError(f"requires rho > 0 and sigma > 0, got ({rho}, {sigma})")
    if z == 0.0:
        return math.exp(-math.lgamma(sigma))
    lz = math.log(abs(z))
    sz = math.copysign(1.0, z)

    def terms():
        sgn = 1.0
        for n in itertools.count():
            yield sgn * math.exp(n * lz - math.lgamma(rho * n + sigma))
            sgn *= sz

    return _sum_terms(terms(), ctl, "two-parameter Mittag-Leffler series")


def ml_prabhakar(
    rho: float, sigma: float, delta: float, z: float, ctl: SeriesControl = DEFAULT_SERIES
) -> float:
    """Prabhakar function sum_n (delta)_n z^n / (Gamma(rho n + sigma) n!)."""
    if not (rho > 0.0 and sigma > 0.0):
        raise DomainError(f"requires rho > 0 and sigma > 0, got ({rho}, {sigma})")
    if z == 0.0:
        return math.exp(-math.lgamma(sigma))
    lz = math.log(abs(z))
    sz = math.copysign(1.0, z)

    def terms():
        lp, sp = 0.0, 1.0  # running log |(delta)_n| and its sign
        sgn = 1.0
        for n in itertools.count():
            if sp == 0.0:
                yield 0.0
            else:
                yield sp * sgn * math.exp(
                    lp + n * lz - math.lgamma(rho * n + sigma) - math.lgamma(n + 1.0)
                )
            f = delta + n
            if f == 0.0:
                sp = 0.0
            elif sp != 0.0:
                lp += math.log(abs(f))
                sp *= math.copysign(1.0, f)
            sgn *= sz

    return _sum_terms(terms(), ctl, "Prabhakar series")


def ml_shukla(
    rho: float,
    sigma: float,
    delta: float,
    q: float,
    z: float,
    ctl: SeriesControl = DEFAULT_SERIES,
) -> float:
    """Shukla-Prajapati function sum_n (delta)_{nq} z^n / (Gamma(rho n + sigma) n!).

    The generalized Pochhammer factor is Gamma(delta + nq)/Gamma(delta),
    evaluated in log space with sign tracking; gamma poles on that path
    raise PoleError.
    """
    if not (rho > 0.0 and sigma > 0.0):
        raise DomainError(f"requires rho > 0 and sigma > 0, got ({rho}, {sigma})")
    if not q > 0.0:
        raise DomainError(f"requires q > 0, got {q}")
    if z == 0.0:
        return math.exp(-math.lgamma(sigma))
    lz = math.log(abs(z))
    sz = math.copysign(1.0, z)
    ld = _log_abs_gamma(delta)
    sd = _gammasgn(delta)

    def terms():
        sgn = 1.0
        for n in itertools.count():
            v = delta + n * q
            yield sgn * sd * _gammasgn(v) * math.exp(
                _log_abs_gamma(v) - ld + n * lz - math.lgamma(rho * n + sigma) - math.lgamma(n + 1.0)
            )
            sgn *= sz

    return _sum_terms(terms(), ctl, "Shukla-Prajapati series")


def ml_extended_oy(
    rho: float,
    sigma: float,
    delta: float,
    c: float,
    z: float,
    p: float,
    ctl: SeriesControl = DEFAULT_SERIES,
    opts: QuadratureOptions = DEFAULT_QUADRATURE,
) -> float:
    """Extended Mittag-Leffler function with exponential beta kernel.

    sum_n [B_p(delta+n, c-delta)/B(delta, c-delta)] (c)_n z^n / (Gamma(rho n + sigma) n!)
    """
    if not (rho > 0.0 and sigma > 0.0):
        raise DomainError(f"requires rho > 0 and sigma > 0, got ({rho}, {sigma})")
    if not c > delta > 0.0:
        raise DomainError(f"requires c > delta > 0, got delta={delta}, c={c}")
    seq = ExtendedBetaSequence(delta, c - delta, p, 1.0, 1.0, opts)
    b0 = beta(delta, c - delta)
    if z == 0.0:
        return _seq_value(seq, 0) / b0 * math.exp(-math.lgamma(sigma))
    lz = math.log(abs(z))
    sz = math.copysign(1.0, z)

    def terms():
        lc = 0.0  # log (c)_n
        sgn = 1.0
        for n in itertools.count():
            yield (_seq_value(seq, n) / b0) * sgn * math.exp(
                lc + n * lz - math.lgamma(rho * n + sigma) - math.lgamma(n + 1.0)
            )
            lc += math.log(c + n)
            sgn *= sz

    return _sum_terms(terms(), ctl, "extended Mittag-Leffler series")


def ml_ext_series(
    params: ExtendedMLParams,
    z: float,
    ctl: SeriesControl = DEFAULT_SERIES,
    opts: QuadratureOptions = DEFAULT_QUADRATURE,
) -> float:
    """Series form of the further-extended Mittag-Leffler function."""
    P = params
    seq = ExtendedBetaSequence(P.gamma, P.c - P.gamma, P.p, P.lam, P.rho, opts)
    b0 = beta(P.gamma, P.c - P.gamma)
    if z == 0.0:
        return _seq_value(seq, 0) / b0 * math.exp(-math.lgamma(P.beta))
    lz = math.log(abs(z))
    sz = math.copysign(1.0, z)

    def terms():
        lc = 0.0
        sgn = 1.0
        for n in itertools.count():
            yield (_seq_value(seq, n) / b0) * sgn * math.exp(
                lc + n * lz - math.lgamma(P.alpha * n + P.beta) - math.lgamma(n + 1.0)
            )
            lc += math.log(P.c + n)
            sgn *= sz

    return _sum_terms(terms(), ctl, "further-extended Mittag-Leffler series")


# --------------------------------------------------------------------------
# integral representations
# --------------------------------------------------------------------------


def _prabhakar_vec(
    rho: float, sigma: float, delta: float, zs: np.ndarray, ctl: SeriesControl = DEFAULT_SERIES
) -> np.ndarray:
    """Prabhakar series over an array of arguments (term recurrence)."""
    zs = np.asarray(zs, dtype=float)
    t = np.full(zs.shape, math.exp(-math.lgamma(sigma)))
    s = t.copy()
    small = 0
    for n in range(ctl.n_max):
        r = (delta + n) / (n + 1.0) * math.exp(
            math.lgamma(rho * n + sigma) - math.lgamma(rho * (n + 1.0) + sigma)
        )
        t = t * zs * r
        s = s + t
        if np.all(np.abs(t) <= ctl.rel_tol * np.maximum(np.abs(s), _TINY)):
            small += 1
            if small >= ctl.consecutive_small:
                return s
        else:
            small = 0
    raise ConvergenceError(f"vector Prabhakar series did not converge within {ctl.n_max} terms")


def ml_ext_integral(
    params: ExtendedMLParams,
    z: float,
    opts: QuadratureOptions = DEFAULT_QUADRATURE,
    ctl: SeriesControl = DEFAULT_SERIES,
) -> float:
    """Integral form over (0, 1): beta-kernel times Prabhakar at t*z."""
    P = params
    b0 = beta(P.gamma, P.c - P.gamma)

    def fk(da, db):
        with np.errstate(over="ignore", under="ignore", divide="ignore"):
            pw = np.exp((P.gamma - 1.0) * np.log(da) + (P.c - P.gamma - 1.0) * np.log(db))
            if P.p > 0.0:
                pw = pw * _kummer_vec(P.lam, P.rho, -P.p / (da * db))
        return pw * _prabhakar_vec(P.alpha, P.beta, P.c, z * da, ctl)

    res = _tanh_sinh(fk, 0.0, 1.0, opts)
    return require_converged(res, "extended Mittag-Leffler integral form") / b0


def ml_ext_integral_semiinf(
    params: ExtendedMLParams,
    z: float,
    opts: QuadratureOptions = DEFAULT_QUADRATURE,
    ctl: SeriesControl = DEFAULT_SERIES,
) -> float:
    """Integral form over (0, inf), the t = u/(1+u) substitution."""
    P = params
    b0 = beta(P.gamma, P.c - P.gamma)

    def fk(g):
        u = g
        with np.errstate(over="ignore", under="ignore", divide="ignore"):
            pw = np.exp((P.gamma - 1.0) * np.log(u) - P.c * np.log1p(u))
            if P.p > 0.0:
                pw = pw * _kummer_vec(P.lam, P.rho, -P.p * (1.0 + u) ** 2 / u)
            arg = z * (u / (1.0 + u))
        return pw * _prabhakar_vec(P.alpha, P.beta, P.c, arg, ctl)

    res = _exp_sinh(fk, 0.0, opts)
    return require_converged(res, "extended Mittag-Leffler semi-infinite form") / b0


def ml_ext_integral_trig(
    params: ExtendedMLParams,
    z: float,
    opts: QuadratureOptions = DEFAULT_QUADRATURE,
    ctl: SeriesControl = DEFAULT_SERIES,
) -> float:
    """Integral form over (0, pi/2), the t = sin^2(theta) substitution."""
    P = params
    b0 = beta(P.gamma, P.c - P.gamma)

    def fk(da, db):
        sin_t = np.sin(da)   # theta measured from 0
        cos_t = np.sin(db)   # pi/2 - theta measured from the other end
        s2 = sin_t * sin_t
        c2 = cos_t * cos_t
        with np.errstate(over="ignore", under="ignore", divide="ignore"):
            pw = 2.0 * np.exp(
                (2.0 * P.gamma - 1.0) * np.log(sin_t)
                + (2.0 * (P.c - P.gamma) - 1.0) * np.log(cos_t)
            )
            if P.p > 0.0:
                pw = pw * _kummer_vec(P.lam, P.rho, -P.p / (s2 * c2))
        return pw * _prabhakar_vec(P.alpha, P.beta, P.c, z * s2, ctl)

    res = _tanh_sinh(fk, 0.0, math.pi / 2.0, opts)
    return require_converged(res, "extended Mittag-Leffler trigonometric form") / b0


# --------------------------------------------------------------------------
# derivatives and identity checks
# --------------------------------------------------------------------------


def ml_ext_derivative(
    params: ExtendedMLParams,
    z: float,
    n: int,
    ctl: SeriesControl = DEFAULT_SERIES,
    opts: QuadratureOptions = DEFAULT_QUADRATURE,
) -> float:
    """n-th z-derivative of the extended function by term-wise differentiation.

    sum_{k>=n} [B-ratio_k] (c)_k z^(k-n) / (Gamma(alpha k + beta) (k-n)!)
    """
    P = params
    if n < 1:
        raise DomainError(f"derivative order must be >= 1, got {n}")
    seq = ExtendedBetaSequence(P.gamma, P.c - P.gamma, P.p, P.lam, P.rho, opts)
    b0 = beta(P.gamma, P.c - P.gamma)
    lc0 = math.lgamma(P.c + n) - math.lgamma(P.c)  # log (c)_n
    if z == 0.0:
        return (_seq_value(seq, n) / b0) * math.exp(lc0 - math.lgamma(P.alpha * n + P.beta))
    lz = math.log(abs(z))
    sz = math.copysign(1.0, z)

    def terms():
        lc = lc0
        sgn = 1.0
        for m in itertools.count():
            yield (_seq_value(seq, n + m) / b0) * sgn * math.exp(
                lc + m * lz - math.lgamma(P.alpha * (n + m) + P.beta) - math.lgamma(m + 1.0)
            )
            lc += math.log(P.c + n + m)
            sgn *= sz

    return _sum_terms(terms(), ctl, "extended Mittag-Leffler derivative series")


def ml_ext_power_derivative(
    params: ExtendedMLParams,
    mu_coef: float,
    z: float,
    n: int,
    ctl: SeriesControl = DEFAULT_SERIES,
    opts: QuadratureOptions = DEFAULT_QUADRATURE,
) -> float:
    """n-th z-derivative of z^(beta-1) E(mu z^alpha; p), term by term.

    Differentiating the product series gives
    sum_k [B-ratio_k] (c)_k mu^k z^(alpha k + beta - n - 1) / (Gamma(alpha k + beta - n) k!).
    Requires beta - n > 0 and z > 0.
    """
    P = params
    if n < 1:
        raise DomainError(f"derivative order must be >= 1, got {n}")
    if not P.beta - n > 0.0:
        raise DomainError(f"requires beta - n > 0, got beta={P.beta}, n={n}")
    if not z > 0.0:
        raise DomainError(f"requires z > 0, got {z}")
    seq = ExtendedBetaSequence(P.gamma, P.c - P.gamma, P.p, P.lam, P.rho, opts)
    b0 = beta(P.gamma, P.c - P.gamma)
    lnz = math.log(z)
    if mu_coef == 0.0:
        return (_seq_value(seq, 0) / b0) * math.exp(
            (P.beta - n - 1.0) * lnz - math.lgamma(P.beta - n)
        )
    lmu = math.log(abs(mu_coef))
    smu = math.copysign(1.0, mu_coef)

    def terms():
        lc = 0.0
        sgn = 1.0
        for k in itertools.count():
            yield (_seq_value(seq, k) / b0) * sgn * math.exp(
                lc + k * lmu + (P.alpha * k + P.beta - n - 1.0) * lnz
                - math.lgamma(P.alpha * k + P.beta - n) - math.lgamma(k + 1.0)
            )
            lc += math.log(P.c + k)
            sgn *= smu

    return _sum_terms(terms(), ctl, "weighted derivative series")


def check_recurrence(
    params: ExtendedMLParams,
    z: float,
    tol: float,
    ctl: SeriesControl = DEFAULT_SERIES,
    opts: QuadratureOptions = DEFAULT_QUADRATURE,
) -> CheckReport:
    """Check E_beta(z;p) = beta E_{beta+1}(z;p) + alpha z d/dz E_{beta+1}(z;p)."""
    P = params
    up = replace(P, beta=P.beta + 1.0)
    lhs = ml_ext_series(P, z, ctl, opts)
    rhs = P.beta * ml_ext_series(up, z, ctl, opts)
    if z != 0.0:
        rhs += P.alpha * z * ml_ext_derivative(up, z, 1, ctl, opts)
    return CheckReport.from_values(lhs, rhs, tol)


def claim_check_theorem_3_2(
    params: ExtendedMLParams,
    z: float,
    n: int,
    tol: float,
    ctl: SeriesControl = DEFAULT_SERIES,
    opts: QuadratureOptions = DEFAULT_QUADRATURE,
) -> CheckReport:
    """Measure the stated n-th derivative formula without asserting it.

    Left side: term-wise n-th derivative.  Right side: the claimed
    (c)_n (lam)_n / (rho)_n prefactor with every parameter shifted by n.
    The report records the gap; callers decide what to make of it.
    """
    P = params
    lhs = ml_ext_derivative(P, z, n, ctl, opts)
    fac = pochhammer(P.c, n) * pochhammer(P.lam, n) / pochhammer(P.rho, n)
    shifted = ExtendedMLParams(
        P.alpha, P.beta + n * P.alpha, P.gamma + n, P.c + n, P.lam + n, P.rho + n, P.p
    )
    rhs = fac * ml_ext_series(shifted, z, ctl, opts)
    return CheckReport.from_values(lhs, rhs, tol)


def claim_check_theorem_3_3(
    params: ExtendedMLParams,
    mu_coef: float,
    z: float,
    n: int,
    tol: float,
    ctl: SeriesControl = DEFAULT_SERIES,
    opts: QuadratureOptions = DEFAULT_QUADRATURE,
) -> CheckReport:
    """Measure the stated weighted-derivative formula without asserting it.

    Left side: term-wise n-th derivative of z^(beta-1) E(mu z^alpha; p).
    Right side: z^(beta-n-1) times the extended function with beta-n and
    all of gamma, c, lam, rho shifted by +n, as stated.
    """
    P = params
    lhs = ml_ext_power_derivative(P, mu_coef, z, n, ctl, opts)
    shifted = ExtendedMLParams(
        P.alpha, P.beta - n, P.gamma + n, P.c + n, P.lam + n, P.rho + n, P.p
    )
    rhs = z ** (P.beta - n - 1.0) * ml_ext_series(shifted, mu_coef * z**P.alpha, ctl, opts)
    return CheckReport.from_values(lhs, rhs, tol)
