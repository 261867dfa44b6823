"""Double-exponential quadrature for finite and semi-infinite intervals.

Finite intervals use the tanh-sinh rule, semi-infinite intervals the
exp-sinh rule.  Both transforms make the trapezoid rule converge
super-algebraically and tolerate integrable algebraic singularities at the
interval endpoints, which is exactly the behaviour of every kernel in this
package (powers ``t^(x-1) (1-t)^(y-1)`` and confluent-hypergeometric
factors that decay only algebraically toward the endpoints).

The engine refines by halving the trapezoid step; the error estimate is
the difference between the last two refinement levels.  Node tables are
computed once per level in transform coordinates, cached at module level
and never mutated afterwards, so concurrent readers are safe.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import ConvergenceError, DomainError, EvaluationError

__all__ = [
    "QuadratureOptions",
    "QuadratureResult",
    "integrate_finite",
    "integrate_semi_infinite",
]

_HALF_PI = math.pi / 2.0

# Beyond |t| = 6.8 the tanh-sinh endpoint offsets underflow double
# precision and the exp-sinh abscissae overflow; nodes out there can never
# contribute and are not generated.
_T_MAX = 6.8

# Weights at or below this are treated as having underflowed: a non-finite
# integrand there is replaced by a zero contribution instead of an error.
_W_TINY = 1e-280


@dataclass(frozen=True)
class QuadratureOptions:
    """Tolerance and budget knobs for the adaptive engine.

    Attributes
    ----------
    rel_tol : float
        Relative tolerance on the integral value.
    abs_tol : float
        Absolute tolerance floor (guards integrals whose value is ~0).
    max_level : int
        Maximum number of step-halving refinements.
    max_evals : int
        Hard cap on integrand evaluations.
    """

    rel_tol: float = 1e-10
    abs_tol: float = 1e-14
    max_level: int = 12
    max_evals: int = 200_000

    def __post_init__(self):
        if not (self.rel_tol > 0.0):
            raise DomainError("rel_tol must be > 0")
        if self.abs_tol < 0.0:
            raise DomainError("abs_tol must be >= 0")
        if self.max_level < 1:
            raise DomainError("max_level must be >= 1")
        if self.max_evals < 16:
            raise DomainError("max_evals must be >= 16")


@dataclass(frozen=True)
class QuadratureResult:
    """Outcome of one adaptive integration.

    ``converged`` is False when the budget ran out before the tolerance was
    met; the value is then the best available estimate, never a silently
    wrong answer.
    """

    value: float
    error_estimate: float
    evaluations: int
    converged: bool


DEFAULT_QUADRATURE = QuadratureOptions()


# --------------------------------------------------------------------------
# node tables (transform coordinates, immutable once built)
# --------------------------------------------------------------------------

_table_lock = threading.Lock()
_ts_levels: list[tuple[np.ndarray, np.ndarray]] = []
_es_levels: list[tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]] = []


def _new_ts(level: int) -> np.ndarray:
    """t-abscissae introduced at ``level`` (positive side, t=0 excluded)."""
    h = 2.0 ** (-level)
    if level == 0:
        return np.arange(1, int(_T_MAX) + 1, dtype=float)
    return np.arange(1, math.ceil(_T_MAX / h), 2, dtype=float) * h


def _level_ts(level: int) -> tuple[np.ndarray, np.ndarray]:
    """Positive-t tanh-sinh nodes new at ``level``: (delta, weight).

    ``delta = 1 - tanh((pi/2) sinh t)`` is the offset from the +1 endpoint
    of the standard interval [-1, 1]; the -1 endpoint is its mirror.  The
    t = 0 centre node is handled separately by the engines.
    """
    if len(_ts_levels) <= level:
        with _table_lock:
            while len(_ts_levels) <= level:
                ts = _new_ts(len(_ts_levels))
                u = _HALF_PI * np.sinh(ts)
                with np.errstate(over="ignore", under="ignore"):
                    delta = 2.0 / (1.0 + np.exp(2.0 * u))
                    w = _HALF_PI * np.cosh(ts) / np.cosh(u) ** 2
                keep = (delta > 0.0) & (w > 0.0)
                _ts_levels.append((delta[keep], w[keep]))
    return _ts_levels[level]


def _level_es(level: int) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """Positive-t exp-sinh nodes new at ``level``: (g+, w+, g-, w-).

    ``g = exp((pi/2) sinh t)`` is the offset from the finite endpoint; the
    +t side runs out to infinity, the -t side into the endpoint.
    """
    if len(_es_levels) <= level:
        with _table_lock:
            while len(_es_levels) <= level:
                ts = _new_ts(len(_es_levels))
                u = _HALF_PI * np.sinh(ts)
                ch = _HALF_PI * np.cosh(ts)
                with np.errstate(over="ignore", under="ignore"):
                    gp = np.exp(u)
                    gm = np.exp(-u)
                    wp = ch * gp
                    wm = ch * gm
                keep = np.isfinite(wp) & (gm > 0.0) & (wm > 0.0)
                _es_levels.append((gp[keep], wp[keep], gm[keep], wm[keep]))
    return _es_levels[level]


# --------------------------------------------------------------------------
# engines
# --------------------------------------------------------------------------


def _apply(values: np.ndarray, weights: np.ndarray, abscissae: np.ndarray) -> float:
    """Weighted sum with the underflow policy applied.

    Non-finite integrand values are zeroed where the weight has underflowed
    (the node is ulp-close to an endpoint) and reported otherwise.
    """
    bad = ~np.isfinite(values)
    if bad.any():
        harmful = bad & (weights > _W_TINY)
        if harmful.any():
            x = float(abscissae[int(np.argmax(harmful))])
            raise EvaluationError(
                f"integrand returned a non-finite value at x = {x!r}", abscissa=x
            )
        values = np.where(bad, 0.0, values)
    return float(np.dot(weights, values))


def _tanh_sinh(
    fk: Callable[[np.ndarray, np.ndarray], np.ndarray],
    a: float,
    b: float,
    opts: QuadratureOptions,
) -> QuadratureResult:
    """Adaptive tanh-sinh core.

    ``fk(da, db)`` receives the exact offsets from both endpoints
    (``x = a + da = b - db``) so integrands with endpoint singularities
    never lose precision to cancellation.
    """
    half = 0.5 * (b - a)
    raw = 0.0
    evals = 0
    prev = None
    value = 0.0
    err = math.inf

    for level in range(opts.max_level + 1):
        delta, w = _level_ts(level)
        n_new = 2 * len(delta) + (1 if level == 0 else 0)
        if evals + n_new > opts.max_evals:
            return QuadratureResult(value, err, evals, False)

        da_m = half * delta           # node near a
        db_m = half * (2.0 - delta)
        new = 0.0
        if level == 0:
            c = np.array([half])
            new += _apply(np.asarray(fk(c, c), dtype=float),
                          np.array([half * _HALF_PI]), np.array([a + half]))
            evals += 1
        for da, db, x in ((da_m, db_m, a + da_m), (db_m, da_m, b - da_m)):
            new += _apply(np.asarray(fk(da, db), dtype=float), half * w, x)
            evals += len(da)

        raw += new
        h = 2.0 ** (-level)
        value = h * raw
        if prev is not None:
            err = abs(value - prev)
            if err <= max(opts.rel_tol * abs(value), opts.abs_tol):
                return QuadratureResult(value, err, evals, True)
        prev = value

    return QuadratureResult(value, err, evals, False)


def _exp_sinh(
    fk: Callable[[np.ndarray], np.ndarray],
    a: float,
    opts: QuadratureOptions,
) -> QuadratureResult:
    """Adaptive exp-sinh core; ``fk(g)`` receives the exact offsets x - a."""
    raw = 0.0
    evals = 0
    prev = None
    value = 0.0
    err = math.inf

    for level in range(opts.max_level + 1):
        gp, wp, gm, wm = _level_es(level)
        n_new = 2 * len(gp) + (1 if level == 0 else 0)
        if evals + n_new > opts.max_evals:
            return QuadratureResult(value, err, evals, False)

        new = 0.0
        if level == 0:
            new += _apply(np.asarray(fk(np.array([1.0])), dtype=float),
                          np.array([_HALF_PI]), np.array([a + 1.0]))
            evals += 1
        for g, w in ((gp, wp), (gm, wm)):
            new += _apply(np.asarray(fk(g), dtype=float), w, a + g)
            evals += len(g)

        raw += new
        h = 2.0 ** (-level)
        value = h * raw
        if prev is not None:
            err = abs(value - prev)
            if err <= max(opts.rel_tol * abs(value), opts.abs_tol):
                return QuadratureResult(value, err, evals, True)
        prev = value

    return QuadratureResult(value, err, evals, False)


# --------------------------------------------------------------------------
# public interface
# --------------------------------------------------------------------------


def integrate_finite(
    f: Callable[[float], float],
    a: float,
    b: float,
    opts: QuadratureOptions = DEFAULT_QUADRATURE,
    *,
    vectorized: bool = False,
) -> QuadratureResult:
    """Integrate ``f`` over the finite interval (a, b).

    ``f`` may have integrable algebraic singularities at either endpoint;
    it is never evaluated exactly at ``a`` or ``b``, and nodes whose
    abscissa rounds onto an endpoint contribute zero.  With
    ``vectorized=True`` the integrand is called with a numpy array of
    abscissae instead of one float at a time.
    """
    if not (math.isfinite(a) and math.isfinite(b)):
        raise DomainError("integration limits must be finite")
    if not a < b:
        raise DomainError(f"invalid interval: a={a} must be < b={b}")

    half = 0.5 * (b - a)
    if vectorized:
        def fk(da, db):
            x = np.where(da <= half, a + da, b - db)
            inside = (x > a) & (x < b)
            out = np.zeros_like(x)
            if inside.any():
                out[inside] = f(x[inside])
            return out
    else:
        def fk(da, db):
            out = np.empty(len(da))
            for i in range(len(da)):
                x = a + da[i] if da[i] <= half else b - db[i]
                out[i] = f(x) if a < x < b else 0.0
            return out
    return _tanh_sinh(fk, a, b, opts)


def integrate_semi_infinite(
    f: Callable[[float], float],
    a: float,
    opts: QuadratureOptions = DEFAULT_QUADRATURE,
    *,
    vectorized: bool = False,
) -> QuadratureResult:
    """Integrate ``f`` over (a, infinity).

    The integral must converge absolutely; algebraic decay of the
    integrand is handled by the exp-sinh transform.
    """
    if not math.isfinite(a):
        raise DomainError("lower limit must be finite")

    if vectorized:
        def fk(g):
            x = a + g
            inside = x > a
            out = np.zeros_like(x)
            if inside.any():
                out[inside] = f(x[inside])
            return out
    else:
        def fk(g):
            out = np.empty(len(g))
            for i in range(len(g)):
                x = a + g[i]
                out[i] = f(x) if x > a else 0.0
            return out
    return _exp_sinh(fk, a, opts)


def require_converged(res: QuadratureResult, what: str) -> float:
    """Return ``res.value`` or raise ConvergenceError naming the integral."""
    if not res.converged:
        raise ConvergenceError(
            f"{what}: quadrature did not converge "
            f"(error estimate {res.error_estimate:.3e} after {res.evaluations} evaluations)",
            partial=res.value,
        )
    return res.value
