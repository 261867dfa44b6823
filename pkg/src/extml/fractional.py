"""Riemann-Liouville fractional derivatives, negative-order (integral) branch.

Three kernels over (0, x): the classical power kernel, the
exponential-regularized kernel, and the confluent-hypergeometric kernel

    D^{mu,p}_x f = (1/Gamma(-mu)) int_0^x f(t) (x-t)^(-mu-1)
                   1F1(lam; rho; -p x^2 / (t (x-t))) dt ,   mu < 0.

Only the directly integral branch is implemented; positive orders (the
d^m/dx^m reduction) are out of scope.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import DomainError
from .mittag import CheckReport, ExtendedMLParams, _prabhakar_vec, ml_ext_series
from .quadrature import (
    DEFAULT_QUADRATURE,
    QuadratureOptions,
    _tanh_sinh,
    require_converged,
)
from .special import DEFAULT_SERIES, SeriesControl, _kummer_vec, beta

__all__ = [
    "FracOrder",
    "rl_derivative",
    "rl_extended",
    "rl_further_extended",
    "check_theorem_3_1",
]


@dataclass(frozen=True)
class FracOrder:
    """Order and kernel parameters of the further-extended derivative."""

    mu: float
    p: float = 0.0
    lam: float = 1.0
    rho: float = 1.0

    def __post_init__(self):
        if not self.mu < 0.0:
            raise DomainError(
                f"only the integral branch (order < 0) is supported, got mu={self.mu}"
            )
        if self.p < 0.0:
            raise DomainError(f"extension parameter p must be >= 0, got {self.p}")
        if not (self.lam > 0.0 and self.rho > 0.0):
            raise DomainError(
                f"kernel parameters must be positive, got lam={self.lam}, rho={self.rho}"
            )


def _rl_core(
    f: Callable,
    x: float,
    mu: float,
    kernel: Callable[[np.ndarray, np.ndarray], np.ndarray] | None,
    opts: QuadratureOptions,
    vectorized: bool,
    what: str,
) -> float:
    if not x > 0.0:
        raise DomainError(f"evaluation point must be positive, got x={x}")
    if not mu < 0.0:
        raise DomainError(f"only the integral branch (order < 0) is supported, got mu={mu}")

    if vectorized:
        fv = f
    else:
        def fv(ts):
            return np.array([f(t) for t in ts], dtype=float)

    def fk(da, db):
        # t = da (exact near the singular end), x - t = db (exact near t = x)
        with np.errstate(over="ignore", under="ignore", divide="ignore"):
            vals = np.asarray(fv(da), dtype=float) * np.exp((-mu - 1.0) * np.log(db))
            if kernel is not None:
                vals = vals * kernel(da, db)
        return vals

    res = _tanh_sinh(fk, 0.0, x, opts)
    return require_converged(res, what) / math.gamma(-mu)


def rl_derivative(
    f: Callable[[float], float],
    x: float,
    mu: float,
    opts: QuadratureOptions = DEFAULT_QUADRATURE,
    *,
    vectorized: bool = False,
) -> float:
    """Classical Riemann-Liouville derivative of order mu < 0 at x."""
    return _rl_core(f, x, mu, None, opts, vectorized, "Riemann-Liouville integral")


def rl_extended(
    f: Callable[[float], float],
    x: float,
    mu: float,
    p: float,
    opts: QuadratureOptions = DEFAULT_QUADRATURE,
    *,
    vectorized: bool = False,
) -> float:
    """Extended derivative with kernel exp(-p x^2 / (t (x-t)))."""
    if p < 0.0:
        raise DomainError(f"extension parameter p must be >= 0, got {p}")
    if p == 0.0:
        return rl_derivative(f, x, mu, opts, vectorized=vectorized)
    px2 = p * x * x

    def kernel(da, db):
        return np.exp(-px2 / (da * db))

    return _rl_core(f, x, mu, kernel, opts, vectorized, "extended Riemann-Liouville integral")


def rl_further_extended(
    f: Callable[[float], float],
    x: float,
    ord: FracOrder,
    opts: QuadratureOptions = DEFAULT_QUADRATURE,
    *,
    vectorized: bool = False,
) -> float:
    """Further-extended derivative with kernel 1F1(lam; rho; -p x^2/(t(x-t)))."""
    if ord.p == 0.0:
        return rl_derivative(f, x, ord.mu, opts, vectorized=vectorized)
    px2 = ord.p * x * x

    def kernel(da, db):
        return _kummer_vec(ord.lam, ord.rho, -px2 / (da * db))

    return _rl_core(
        f, x, ord.mu, kernel, opts, vectorized, "further-extended Riemann-Liouville integral"
    )


def check_theorem_3_1(
    delta: float,
    mu: float,
    alpha: float,
    beta_: float,
    cml: float,
    z: float,
    p: float,
    lam: float,
    rho: float,
    tol: float,
    ctl: SeriesControl = DEFAULT_SERIES,
    opts: QuadratureOptions = DEFAULT_QUADRATURE,
) -> CheckReport:
    """Fractional-derivative image of t^(delta-1) E^cml(t) vs the extended function.

    Left side: the further-extended derivative of order delta - mu applied
    to f(t) = t^(delta-1) E^cml_{alpha,beta}(t), evaluated at x = z.
    Right side: z^(mu-1) B(delta, cml - delta) / Gamma(mu - delta) times the
    extended function with gamma := delta and c := mu (the identification
    forced by matching the integral representation).  Note the prefactor
    beta reads its second argument from the Prabhakar parameter cml; the
    two sides agree when cml equals mu.
    """
    if not mu > delta > 0.0:
        raise DomainError(f"requires mu > delta > 0, got delta={delta}, mu={mu}")
    if not cml > delta:
        raise DomainError(f"requires cml > delta for the beta prefactor, got cml={cml}")
    if not z > 0.0:
        raise DomainError(f"requires z > 0, got z={z}")

    def f(ts):
        with np.errstate(over="ignore", under="ignore", divide="ignore"):
            return np.exp((delta - 1.0) * np.log(ts)) * _prabhakar_vec(alpha, beta_, cml, ts, ctl)

    lhs = rl_further_extended(
        f, z, FracOrder(delta - mu, p, lam, rho), opts, vectorized=True
    )
    pref = z ** (mu - 1.0) * beta(delta, cml - delta) / math.gamma(mu - delta)
    rhs = pref * ml_ext_series(
        ExtendedMLParams(alpha, beta_, delta, mu, lam, rho, p), z, ctl, opts
    )
    return CheckReport.from_values(lhs, rhs, tol)
