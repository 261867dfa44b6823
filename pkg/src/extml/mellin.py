"""Mellin transform of the extended Mittag-Leffler function in p.

Two independent routes to the same number: a closed form built from the
extended gamma function and a Wright 2Psi2 series, and the direct
semi-infinite integral int_0^inf p^(s-1) E(z; p) dp evaluated numerically
with the full function re-evaluated at every quadrature node.  Their
agreement is the point of this module.

Note on the Wright pairs: the lower pair is (beta, alpha) -- the series
denominator carries Gamma(alpha n + beta) -- paired with (c + 2s, 1);
the upper pairs are (c, 1) and (gamma + s, 1).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

from .errors import DomainError
from .extbeta import extended_gamma_closed_form
from .mittag import CheckReport, ExtendedMLParams, ml_ext_series
from .quadrature import (
    DEFAULT_QUADRATURE,
    QuadratureOptions,
    integrate_semi_infinite,
    require_converged,
)
from .special import DEFAULT_SERIES, SeriesControl, WrightSeriesSpec, wright_psi

__all__ = ["MellinPoint", "mellin_closed_form", "mellin_numeric", "check_mellin"]


@dataclass(frozen=True)
class MellinPoint:
    """Transform variable, function parameters and argument of one transform."""

    s: float
    params: ExtendedMLParams
    z: float

    def __post_init__(self):
        P = self.params
        if not 0.0 < self.s < P.lam:
            raise DomainError(
                f"Mellin transform converges only on the strip 0 < s < lam: "
                f"got s={self.s}, lam={P.lam}"
            )
        if not (P.gamma + self.s > 0.0 and P.c + 2.0 * self.s - P.gamma > 0.0):
            raise DomainError("all gamma factors must sit on the positive axis")


def mellin_closed_form(
    pt: MellinPoint,
    ctl: SeriesControl = DEFAULT_SERIES,
    opts: QuadratureOptions = DEFAULT_QUADRATURE,
) -> float:
    """Closed form: extended-gamma prefactor times a Wright 2Psi2 series."""
    P = pt.params
    s = pt.s
    eg = extended_gamma_closed_form(s, P.lam, P.rho)
    pref = eg * math.exp(
        math.lgamma(P.c + s - P.gamma) - math.lgamma(P.gamma) - math.lgamma(P.c - P.gamma)
    )
    series = WrightSeriesSpec(
        upper=[(P.c, 1.0), (P.gamma + s, 1.0)],
        lower=[(P.beta, P.alpha), (P.c + 2.0 * s, 1.0)],
    )
    return pref * wright_psi(series, pt.z, ctl)


def mellin_numeric(
    pt: MellinPoint,
    ctl: SeriesControl = DEFAULT_SERIES,
    opts: QuadratureOptions = DEFAULT_QUADRATURE,
    inner_ctl: SeriesControl | None = None,
    inner_opts: QuadratureOptions | None = None,
) -> float:
    """Direct transform integral, re-evaluating the function at each node's p.

    The inner evaluation runs two orders of magnitude tighter than the
    outer tolerance so that the outer refinement differences sit above the
    inner noise floor; a cache keyed on p would stay cold because exp-sinh
    nodes never repeat across levels, so none is kept.
    """
    P = pt.params
    s = pt.s
    if inner_ctl is None:
        inner_ctl = SeriesControl(rel_tol=min(ctl.rel_tol, 1e-11))
    if inner_opts is None:
        # relative-only tolerance: the transform tail weights tiny function
        # values by large powers of p, so an absolute floor on the inner
        # integrals would bias the tail
        inner_opts = QuadratureOptions(
            rel_tol=min(max(opts.rel_tol * 1e-2, 1e-12), 1e-9),
            abs_tol=0.0,
            max_level=opts.max_level,
            max_evals=opts.max_evals,
        )

    def f(p: float) -> float:
        e = ml_ext_series(replace(P, p=p), pt.z, inner_ctl, inner_opts)
        if e == 0.0:
            return 0.0
        # p^(s-1) * e, assembled in log space to dodge transient overflow
        return math.copysign(1.0, e) * math.exp((s - 1.0) * math.log(p) + math.log(abs(e)))

    res = integrate_semi_infinite(f, 0.0, opts)
    return require_converged(res, f"Mellin transform at s={s}")


def check_mellin(
    pt: MellinPoint,
    tol: float,
    ctl: SeriesControl = DEFAULT_SERIES,
    opts: QuadratureOptions = DEFAULT_QUADRATURE,
) -> CheckReport:
    """Run both transform routes and report their gap."""
    lhs = mellin_numeric(pt, ctl, opts)
    rhs = mellin_closed_form(pt, ctl, opts)
    return CheckReport.from_values(lhs, rhs, tol)
