"""Baseline special functions: gamma, beta, Pochhammer, Kummer 1F1, Wright psi.

The confluent hypergeometric evaluation is organised in three regimes:
direct Taylor series for non-negative arguments, the Kummer transformation
``1F1(a;b;x) = e^x 1F1(b-a;b;-x)`` for moderately negative arguments
(avoiding the catastrophic cancellation of the alternating direct series),
and the algebraic asymptotic expansion for large negative arguments.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import AccuracyLossError, ConvergenceError, DomainError, PoleError

__all__ = [
    "SeriesControl",
    "WrightSeriesSpec",
    "log_gamma",
    "beta",
    "pochhammer",
    "pochhammer_real",
    "kummer_1f1",
    "wright_psi",
]

# Negative arguments at or below -X_ASYM go to the asymptotic expansion.
X_ASYM = 50.0

# Relative target for series termination (a shade above machine epsilon).
_EPS_STOP = 5e-17
_TINY = 1e-300


@dataclass(frozen=True)
class SeriesControl:
    """Stopping rule shared by every series summation in the package.

    A series is accepted once ``consecutive_small`` successive terms each
    fall below ``rel_tol`` times the magnitude of the partial sum; a single
    small term is not proof of convergence because the terms are not
    sign-definite for negative arguments.
    """

    rel_tol: float = 1e-12
    consecutive_small: int = 3
    n_max: int = 10000

    def __post_init__(self):
        if not (self.rel_tol > 0.0):
            raise DomainError("rel_tol must be > 0")
        if self.consecutive_small < 1:
            raise DomainError("consecutive_small must be >= 1")
        if self.n_max < self.consecutive_small:
            raise DomainError("n_max must be >= consecutive_small")


DEFAULT_SERIES = SeriesControl()


@dataclass(frozen=True)
class WrightSeriesSpec:
    """Parameter pairs of a generalized Wright series pPsi_q.

    ``upper`` holds the numerator pairs (alpha_i, A_i), ``lower`` the
    denominator pairs (beta_j, B_j); all A_i, B_j must be positive and the
    series converges for every argument only when
    ``1 + sum(B_j) - sum(A_i) >= 0``.
    """

    upper: tuple[tuple[float, float], ...]
    lower: tuple[tuple[float, float], ...]

    def __init__(self, upper: Sequence[tuple[float, float]], lower: Sequence[tuple[float, float]]):
        object.__setattr__(self, "upper", tuple((float(a), float(A)) for a, A in upper))
        object.__setattr__(self, "lower", tuple((float(b), float(B)) for b, B in lower))
        if any(A <= 0.0 for _, A in self.upper) or any(B <= 0.0 for _, B in self.lower):
            raise DomainError("all scale factors A_i, B_j must be positive")
        margin = 1.0 + sum(B for _, B in self.lower) - sum(A for _, A in self.upper)
        if margin < -1e-12:
            raise DomainError(
                f"series convergence condition violated: 1 + sum(B) - sum(A) = {margin} < 0"
            )


# --------------------------------------------------------------------------
# gamma family
# --------------------------------------------------------------------------


def log_gamma(x: float) -> float:
    """Natural log of Gamma(x) for x > 0."""
    if not x > 0.0:
        raise DomainError(f"log_gamma requires x > 0, got {x}")
    return math.lgamma(x)


def _log_abs_gamma(x: float) -> float:
    """log |Gamma(x)| for any real x off the poles."""
    try:
        return math.lgamma(x)
    except ValueError:
        raise PoleError(f"gamma pole at x = {x}") from None


def _gammasgn(x: float) -> float:
    """Sign of Gamma(x); raises PoleError on the poles."""
    if x > 0.0:
        return 1.0
    if x == math.floor(x):
        raise PoleError(f"gamma pole at x = {x}")
    return 1.0 if math.floor(x) % 2 == 0 else -1.0


def beta(x: float, y: float) -> float:
    """Classical beta function B(x, y), computed in log space."""
    if not (x > 0.0 and y > 0.0):
        raise DomainError(f"beta requires positive arguments, got ({x}, {y})")
    return math.exp(math.lgamma(x) + math.lgamma(y) - math.lgamma(x + y))


def pochhammer(delta: float, n: int) -> float:
    """Rising factorial (delta)_n; exact product for small n."""
    if n < 0:
        raise DomainError(f"pochhammer requires n >= 0, got {n}")
    if n == 0:
        return 1.0
    if n <= 64 or (delta <= 0.0 and delta == math.floor(delta)):
        if delta <= 0.0 and delta == math.floor(delta) and n >= 1 - delta:
            return 0.0
        out = 1.0
        for k in range(n):
            out *= delta + k
        return out
    sg = _gammasgn(delta + n) * _gammasgn(delta)
    return sg * math.exp(_log_abs_gamma(delta + n) - _log_abs_gamma(delta))


def pochhammer_real(delta: float, h: float) -> float:
    """Generalized rising factorial (delta)_h = Gamma(delta+h)/Gamma(delta).

    Used for real increments h = n*q; gamma poles on either side raise
    PoleError.
    """
    if h < 0.0:
        raise DomainError(f"pochhammer_real requires h >= 0, got {h}")
    if h == 0.0:
        return 1.0
    sg = _gammasgn(delta + h) * _gammasgn(delta)
    return sg * math.exp(_log_abs_gamma(delta + h) - _log_abs_gamma(delta))


# --------------------------------------------------------------------------
# Kummer confluent hypergeometric 1F1
# --------------------------------------------------------------------------


def _check_rho(rho: float) -> None:
    if rho <= 0.0 and rho == math.floor(rho):
        raise DomainError(f"1F1 pole: second parameter {rho} is a non-positive integer")


def _kummer_taylor(a: float, b: float, x: float, max_terms: int = 4000) -> float:
    """Direct Taylor sum of 1F1(a;b;x); safe for x >= 0 (no cancellation)."""
    term = 1.0
    s = 1.0
    small = 0
    for n in range(max_terms):
        term *= (a + n) * x / ((b + n) * (n + 1.0))
        s += term
        if abs(term) <= _EPS_STOP * max(abs(s), _TINY):
            small += 1
            if small >= 2:
                return s
        else:
            small = 0
    raise ConvergenceError(
        f"1F1 Taylor series did not converge for a={a}, b={b}, x={x}", partial=s
    )


def _asym_series(lam: float, rho: float, y: float) -> tuple[float, float]:
    """Algebraic expansion sum_k (lam)_k (lam-rho+1)_k / (k! y^k).

    Optimal (smallest-term) truncation; returns (sum, achieved relative
    accuracy).
    """
    s = 1.0
    t = 1.0
    for k in range(200):
        tn = t * (lam + k) * (lam - rho + 1.0 + k) / ((k + 1.0) * y)
        if abs(tn) <= 1e-14 * abs(s):
            return s + tn, 1e-14
        if abs(tn) >= abs(t):
            return s, abs(tn) / max(abs(s), _TINY)
        s += tn
        t = tn
    return s, abs(t) / max(abs(s), _TINY)


def _kummer_asymptotic(lam: float, rho: float, x: float) -> float:
    """1F1 for x <= -X_ASYM via the algebraic asymptotic expansion.

    Falls back to the transformed Taylor series when optimal truncation or
    the exponentially small companion term would spoil the 1e-11 accuracy
    contract (this happens close to the branch point when lam - rho is
    large).
    """
    y = -x
    d = rho - lam
    if d <= 0.0 and d == math.floor(d):
        # 1/Gamma pole: the algebraic branch vanishes identically and the
        # function is exponentially small.
        return _kummer_neg_fallback(lam, rho, y, None)

    series, achieved = _asym_series(lam, rho, y)
    if series == 0.0:
        return 0.0
    log_mag = _log_abs_gamma(rho) - _log_abs_gamma(d) - lam * math.log(y) + math.log(abs(series))
    sgn = _gammasgn(rho) * _gammasgn(d) * math.copysign(1.0, series)
    val = sgn * math.exp(log_mag)

    # relative size of the neglected e^{-y} companion term
    log_rel_exp = (-y + (lam - rho) * math.log(y)
                   + _log_abs_gamma(rho) - _log_abs_gamma(lam)) - log_mag
    if max(achieved, math.exp(min(log_rel_exp, 0.0))) <= 1e-12:
        return val
    return _kummer_neg_fallback(lam, rho, y, val)


def _kummer_neg_fallback(lam: float, rho: float, y: float, best: float | None) -> float:
    if y <= 700.0:
        # transformed Taylor series stays within double range up to here
        return math.exp(-y) * _kummer_taylor(rho - lam, rho, y)
    if best is None:
        # exponentially small result beyond double-precision range
        return 0.0
    raise AccuracyLossError(
        f"1F1 asymptotic expansion stalled for lam={lam}, rho={rho}, x={-y}",
        estimate=best,
    )


def kummer_1f1(lam: float, rho: float, x: float) -> float:
    """Confluent hypergeometric 1F1(lam; rho; x) on the real line.

    Negative arguments are evaluated through the Kummer transformation,
    large negative arguments (x <= -50) through the algebraic asymptotic
    expansion with leading term Gamma(rho)/Gamma(rho-lam) * (-x)^(-lam).
    """
    _check_rho(rho)
    if not math.isfinite(x):
        raise DomainError(f"1F1 argument must be finite, got {x}")
    if x == 0.0:
        return 1.0
    if lam <= 0.0 and lam == math.floor(lam):
        # terminating polynomial; the recurrence hits an exact zero
        return _kummer_taylor(lam, rho, x)
    if x > 0.0:
        return _kummer_taylor(lam, rho, x)
    if x > -X_ASYM:
        return math.exp(x) * _kummer_taylor(rho - lam, rho, -x)
    return _kummer_asymptotic(lam, rho, x)


# --------------------------------------------------------------------------
# vectorized 1F1 (internal; drives the quadrature kernels)
# --------------------------------------------------------------------------


def _taylor_vec(a: float, b: float, xs: np.ndarray, max_terms: int = 4000) -> np.ndarray:
    s = np.ones_like(xs)
    t = np.ones_like(xs)
    small = 0
    for n in range(max_terms):
        t = t * xs * ((a + n) / ((b + n) * (n + 1.0)))
        s = s + t
        if np.all(np.abs(t) <= _EPS_STOP * np.maximum(np.abs(s), _TINY)):
            small += 1
            if small >= 2:
                return s
        else:
            small = 0
    raise ConvergenceError(f"vector 1F1 Taylor series did not converge for a={a}, b={b}")


def _asym_vec(lam: float, rho: float, x: np.ndarray) -> np.ndarray:
    y = -x
    d = rho - lam
    if d <= 0.0 and d == math.floor(d):
        return np.array([kummer_1f1(lam, rho, xi) for xi in x], dtype=float)

    s = np.ones_like(y)
    t = np.ones_like(y)
    ok = np.zeros(y.shape, dtype=bool)
    active = np.ones(y.shape, dtype=bool)
    for k in range(120):
        tn = t * ((lam + k) * (lam - rho + 1.0 + k) / (k + 1.0)) / y
        conv = active & (np.abs(tn) <= 1e-14 * np.abs(s))
        grow = active & ~conv & (np.abs(tn) >= np.abs(t))
        s = np.where(active & ~grow, s + tn, s)
        ok |= conv
        active &= ~(conv | grow)
        t = np.where(active, tn, t)
        if not active.any():
            break

    achieved = np.where(ok, 1e-14, np.abs(t) / np.maximum(np.abs(s), _TINY))
    logC = _log_abs_gamma(rho) - _log_abs_gamma(d)
    sgnC = _gammasgn(rho) * _gammasgn(d)
    with np.errstate(under="ignore"):
        log_mag = logC - lam * np.log(y) + np.log(np.maximum(np.abs(s), _TINY))
        val = sgnC * np.sign(s) * np.exp(log_mag)
        log_rel_exp = (-y + (lam - rho) * np.log(y)
                       + _log_abs_gamma(rho) - _log_abs_gamma(lam)) - log_mag
    bad = (achieved > 1e-12) | (log_rel_exp > math.log(1e-12))
    if bad.any():
        val[bad] = [kummer_1f1(lam, rho, xi) for xi in x[bad]]
    return val


def _kummer_vec(lam: float, rho: float, x: np.ndarray) -> np.ndarray:
    """Vectorized 1F1(lam; rho; x) over an array of real arguments.

    Arguments of -inf (kernel denominators that underflowed) map to the
    algebraic-decay limit 0, which requires lam > 0.
    """
    _check_rho(rho)
    x = np.asarray(x, dtype=float)
    out = np.ones_like(x)

    ninf = np.isneginf(x)
    if ninf.any():
        if lam <= 0.0:
            raise DomainError("1F1 at -inf requires a positive first parameter")
        out[ninf] = 0.0

    if lam <= 0.0 and lam == math.floor(lam):
        m = np.isfinite(x) & (x != 0.0)
        if m.any():
            out[m] = _taylor_vec(lam, rho, x[m])
        return out

    pos = x > 0.0
    if pos.any():
        out[pos] = _taylor_vec(lam, rho, x[pos])
    mid = (x < 0.0) & (x > -X_ASYM)
    if mid.any():
        with np.errstate(under="ignore"):
            out[mid] = np.exp(x[mid]) * _taylor_vec(rho - lam, rho, -x[mid])
    asy = (x <= -X_ASYM) & ~ninf
    if asy.any():
        out[asy] = _asym_vec(lam, rho, x[asy])
    return out


# --------------------------------------------------------------------------
# Wright generalized hypergeometric series
# --------------------------------------------------------------------------


def wright_psi(spec: WrightSeriesSpec, z: float, ctl: SeriesControl = DEFAULT_SERIES) -> float:
    """Sum of the Wright series pPsi_q at real argument z.

    Each term's ratio of gamma factors is computed in log space with sign
    tracking; a gamma pole in any pair raises PoleError.
    """
    if z == 0.0:
        lg = sum(_log_abs_gamma(a) for a, _ in spec.upper)
        lg -= sum(_log_abs_gamma(b) for b, _ in spec.lower)
        sg = 1.0
        for a, _ in spec.upper:
            sg *= _gammasgn(a)
        for b, _ in spec.lower:
            sg *= _gammasgn(b)
        return sg * math.exp(lg)

    lz = math.log(abs(z))
    zsign = math.copysign(1.0, z)
    s = 0.0
    small = 0
    szn = 1.0
    for n in range(ctl.n_max):
        lg = -math.lgamma(n + 1.0)
        sg = szn
        for a, A in spec.upper:
            v = a + A * n
            lg += _log_abs_gamma(v)
            sg *= _gammasgn(v)
        for b, B in spec.lower:
            v = b + B * n
            lg -= _log_abs_gamma(v)
            sg *= _gammasgn(v)
        try:
            term = sg * math.exp(lg + n * lz)
        except OverflowError:
            raise ConvergenceError(
                f"Wright series diverged: term overflow at n={n}", partial=s
            ) from None
        s += term
        if abs(term) <= ctl.rel_tol * max(abs(s), _TINY):
            small += 1
            if small >= ctl.consecutive_small:
                return s
        else:
            small = 0
        szn *= zsign
    raise ConvergenceError(
        f"Wright series did not converge within {ctl.n_max} terms", partial=s
    )
