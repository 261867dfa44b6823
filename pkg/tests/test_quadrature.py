import math
import random

import numpy as np
import pytest

from extml import DomainError, EvaluationError, QuadratureOptions, integrate_finite, integrate_semi_infinite


def rel_gap(a, b):
    return abs(a - b) / max(abs(a), abs(b), 1e-300)


def test_finite_constant():
    res = integrate_finite(lambda t: 1.0, 0.0, 1.0)
    assert res.converged
    assert rel_gap(res.value, 1.0) < 1e-13


def test_finite_inverse_sqrt_endpoint_singularity():
    res = integrate_finite(lambda t: t**-0.5, 0.0, 1.0)
    assert res.converged
    assert rel_gap(res.value, 2.0) < 1e-12


def test_finite_polynomial():
    res = integrate_finite(lambda t: t * (1.0 - t), 0.0, 1.0)
    assert res.converged
    assert rel_gap(res.value, 1.0 / 6.0) < 1e-13


def test_semi_infinite_exponential():
    res = integrate_semi_infinite(lambda t: math.exp(-t), 0.0)
    assert res.converged
    assert rel_gap(res.value, 1.0) < 1e-12


def test_semi_infinite_algebraic_tail():
    res = integrate_semi_infinite(lambda t: (1.0 / (1.0 + t)) ** 2, 0.0)
    assert res.converged
    assert rel_gap(res.value, 1.0) < 1e-12


def test_semi_infinite_gamma_two():
    res = integrate_semi_infinite(lambda t: t * math.exp(-t), 0.0)
    assert res.converged
    assert rel_gap(res.value, 1.0) < 1e-12


def test_linearity():
    rng = random.Random(42)
    f = lambda t: math.exp(-t) * (1.0 + t * t)
    base = integrate_finite(f, 0.0, 1.0).value
    for _ in range(10):
        c = rng.uniform(-10.0, 10.0)
        scaled = integrate_finite(lambda t: c * f(t), 0.0, 1.0).value
        assert abs(scaled - c * base) <= 1e-10 * max(abs(c * base), 1.0)


def test_interval_additivity():
    rng = random.Random(43)
    f = lambda t: math.cos(3.0 * t) + t
    whole = integrate_finite(f, 0.0, 1.0).value
    for _ in range(10):
        s = rng.uniform(0.05, 0.95)
        left = integrate_finite(f, 0.0, s).value
        right = integrate_finite(f, s, 1.0).value
        assert rel_gap(whole, left + right) < 1e-9


@pytest.mark.parametrize("e", [-0.9, -0.5, -0.1])
def test_endpoint_singularity_regression(e):
    res = integrate_finite(lambda t: t**e, 0.0, 1.0)
    assert res.converged
    assert rel_gap(res.value, 1.0 / (1.0 + e)) < 1e-10


@pytest.mark.parametrize("f", [lambda t: math.exp(-t), lambda t: (1.0 / (1.0 + t)) ** 2])
def test_semi_infinite_matches_substitution(f):
    direct = integrate_semi_infinite(f, 0.0).value
    sub = integrate_finite(lambda u: f(u / (1.0 - u)) / (1.0 - u) ** 2, 0.0, 1.0).value
    assert rel_gap(direct, sub) < 1e-9


def test_invalid_interval():
    with pytest.raises(DomainError):
        integrate_finite(lambda t: 1.0, 1.0, 1.0)
    with pytest.raises(DomainError):
        integrate_finite(lambda t: 1.0, 2.0, 1.0)
    with pytest.raises(DomainError):
        integrate_finite(lambda t: 1.0, 0.0, math.inf)
    with pytest.raises(DomainError):
        integrate_semi_infinite(lambda t: 1.0, math.nan)


def test_non_finite_integrand_reports_abscissa():
    def f(t):
        return math.nan if 0.4 < t < 0.6 else 1.0

    with pytest.raises(EvaluationError) as err:
        integrate_finite(f, 0.0, 1.0)
    assert err.value.abscissa is not None
    assert 0.4 < err.value.abscissa < 0.6


def test_budget_exhaustion_returns_unconverged():
    opts = QuadratureOptions(max_evals=16)
    res = integrate_finite(lambda t: t**-0.5, 0.0, 1.0, opts)
    assert not res.converged
    assert res.evaluations <= 16


def test_converged_result_honours_tolerance_invariant():
    opts = QuadratureOptions(rel_tol=1e-8, abs_tol=1e-13)
    res = integrate_finite(lambda t: math.exp(t), 0.0, 1.0, opts)
    assert res.converged
    assert res.error_estimate <= max(opts.rel_tol * abs(res.value), opts.abs_tol)


@pytest.mark.parametrize("kwargs", [
    {"rel_tol": 0.0},
    {"rel_tol": -1e-10},
    {"abs_tol": -1.0},
    {"max_level": 0},
    {"max_evals": 8},
])
def test_options_validation(kwargs):
    with pytest.raises(DomainError):
        QuadratureOptions(**kwargs)


def test_vectorized_matches_scalar():
    f_s = lambda t: math.sin(t) / (t + 0.1)
    f_v = lambda t: np.sin(t) / (t + 0.1)
    a = integrate_finite(f_s, 0.0, 2.0).value
    b = integrate_finite(f_v, 0.0, 2.0, vectorized=True).value
    assert a == b
    c = integrate_semi_infinite(lambda t: math.exp(-2 * t), 0.0).value
    d = integrate_semi_infinite(lambda t: np.exp(-2 * t), 0.0, vectorized=True).value
    assert c == d
