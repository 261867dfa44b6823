import math
import random

import mpmath as mp
import numpy as np
import pytest

from extml import (
    ConvergenceError,
    DomainError,
    PoleError,
    SeriesControl,
    WrightSeriesSpec,
    beta,
    kummer_1f1,
    log_gamma,
    pochhammer,
    pochhammer_real,
    wright_psi,
)
from extml.special import _kummer_vec


def rel_gap(a, b):
    return abs(a - b) / max(abs(a), abs(b), 1e-300)


def oracle_1f1(a, b, x, terms=400):
    """Extended-precision direct Taylor summation (no transformation).

    All parameters are promoted to mpf before any arithmetic: the
    alternating series amplifies even double-rounding of the term factors.
    """
    with mp.workdps(50):
        a, b, x = mp.mpf(a), mp.mpf(b), mp.mpf(x)
        term = mp.mpf(1)
        total = mp.mpf(1)
        for n in range(terms):
            term *= (a + n) * x / ((b + n) * (n + 1))
            total += term
            if abs(term) < mp.mpf("1e-45") * abs(total):
                break
        return float(total)


# ---------------------------------------------------------------- gamma/beta


def test_log_gamma_values():
    assert log_gamma(1.0) == 0.0
    assert rel_gap(log_gamma(5.0), math.log(24.0)) < 1e-14
    assert rel_gap(log_gamma(0.5), math.log(math.sqrt(math.pi))) < 1e-14


def test_log_gamma_domain():
    for bad in (0.0, -1.0, -0.5, math.nan):
        with pytest.raises(DomainError):
            log_gamma(bad)


def test_gamma_recurrence_property():
    rng = random.Random(7)
    for _ in range(200):
        x = rng.uniform(0.1, 30.0)
        g_x = math.exp(log_gamma(x))
        g_x1 = math.exp(log_gamma(x + 1.0))
        assert rel_gap(g_x1, x * g_x) < 1e-12


def test_beta_values():
    assert rel_gap(beta(1.0, 1.0), 1.0) < 1e-14
    assert rel_gap(beta(2.0, 3.0), 1.0 / 12.0) < 1e-13
    assert rel_gap(beta(0.5, 0.5), math.pi) < 1e-13
    with pytest.raises(DomainError):
        beta(0.0, 1.0)
    with pytest.raises(DomainError):
        beta(1.0, -2.0)


def test_pochhammer_values():
    assert pochhammer(7.3, 0) == 1.0
    assert pochhammer(3.0, 4) == 360.0
    assert pochhammer(-2.0, 4) == 0.0
    with pytest.raises(DomainError):
        pochhammer(1.0, -1)


def test_pochhammer_large_n_log_path():
    got = pochhammer(3.7, 100)
    want = float(mp.rf(mp.mpf("3.7"), 100))
    assert rel_gap(got, want) < 1e-12


def test_pochhammer_negative_base_sign():
    got = pochhammer(-2.5, 71)
    want = float(mp.rf(mp.mpf("-2.5"), 71))
    assert rel_gap(got, want) < 1e-11
    assert pochhammer(-40.0, 80) == 0.0


def test_pochhammer_real():
    assert pochhammer_real(1.6, 0.0) == 1.0
    got = pochhammer_real(1.6, 7.3)
    want = float(mp.rf(mp.mpf("1.6"), mp.mpf("7.3")))
    assert rel_gap(got, want) < 1e-12
    with pytest.raises(PoleError):
        pochhammer_real(-2.0, 0.5)
    with pytest.raises(DomainError):
        pochhammer_real(1.0, -0.5)


# ---------------------------------------------------------------- kummer 1F1


def test_kummer_trivial_values():
    assert rel_gap(kummer_1f1(2.5, 2.5, 1.0), math.e) < 1e-13
    assert rel_gap(kummer_1f1(1.0, 2.0, 1.0), math.e - 1.0) < 1e-13
    assert kummer_1f1(1.3, 0.4, 0.0) == 1.0


def test_kummer_pole_parameter():
    for rho in (0.0, -1.0, -7.0):
        with pytest.raises(DomainError):
            kummer_1f1(1.0, rho, 0.5)


def test_kummer_transform_self_consistency():
    rng = random.Random(11)
    for _ in range(30):
        lam = rng.uniform(0.3, 3.0)
        rho = rng.uniform(0.5, 3.5)
        x = rng.uniform(-30.0, -0.01)
        assert rel_gap(kummer_1f1(lam, rho, x), oracle_1f1(lam, rho, x)) < 1e-8


def test_kummer_contiguous_derivative_relation():
    rng = random.Random(12)
    h = 1e-5
    for _ in range(50):
        lam = rng.uniform(0.4, 2.5)
        rho = rng.uniform(0.6, 3.0)
        x = rng.uniform(-20.0, 30.0)
        fd = (kummer_1f1(lam, rho, x + h) - kummer_1f1(lam, rho, x - h)) / (2.0 * h)
        closed = lam / rho * kummer_1f1(lam + 1.0, rho + 1.0, x)
        assert rel_gap(fd, closed) < 1e-6


def test_kummer_asymptotic_leading_term():
    got = kummer_1f1(1.5, 2.5, -200.0)
    leading = math.gamma(2.5) / math.gamma(1.0) * 200.0**-1.5
    assert rel_gap(got, leading) < 5e-4  # 3 significant digits


@pytest.mark.parametrize("x", [-60.0, -200.0, -1e4, -1e8])
def test_kummer_asymptotic_branch_accuracy(x):
    got = kummer_1f1(1.3, 2.8, x)
    want = float(mp.hyp1f1(mp.mpf("1.3"), mp.mpf("2.8"), mp.mpf(x)))
    assert rel_gap(got, want) < 1e-11


def test_kummer_hard_branch_point_case():
    # lam much larger than rho near the branch switch: the expansion alone
    # cannot reach the accuracy contract and must fall back internally
    got = kummer_1f1(5.0, 1.2, -50.0)
    want = float(mp.hyp1f1(5, mp.mpf("1.2"), -50))
    assert rel_gap(got, want) < 1e-11


def test_kummer_polynomial_case():
    # lam a non-positive integer terminates the series exactly
    got = kummer_1f1(-2.0, 1.5, -300.0)
    want = float(mp.hyp1f1(-2, mp.mpf("1.5"), -300))
    assert rel_gap(got, want) < 1e-13


def test_kummer_vec_matches_scalar():
    xs = np.array([-2e8, -1e4, -200.0, -50.0, -49.9, -7.0, -0.3, 0.0, 0.4, 30.0])
    lam, rho = 1.7, 2.4
    vec = _kummer_vec(lam, rho, xs)
    for xi, vi in zip(xs, vec):
        assert rel_gap(vi, kummer_1f1(lam, rho, float(xi))) < 1e-12
    assert _kummer_vec(lam, rho, np.array([-math.inf]))[0] == 0.0


# ---------------------------------------------------------------- wright psi


def test_wright_exponential_reductions():
    one = WrightSeriesSpec(upper=[(1.0, 1.0)], lower=[(1.0, 1.0)])
    assert rel_gap(wright_psi(one, 1.0), math.e) < 1e-12
    two = WrightSeriesSpec(upper=[(1.0, 1.0), (1.0, 1.0)], lower=[(1.0, 1.0), (1.0, 1.0)])
    assert rel_gap(wright_psi(two, 1.0), math.e) < 1e-12


def test_wright_closed_form_example():
    # sum (n+1) x^n / n! = (1+x) e^x at x = 0.5
    spec = WrightSeriesSpec(upper=[(2.0, 1.0)], lower=[(1.0, 1.0)])
    assert rel_gap(wright_psi(spec, 0.5), 2.4730819060501922) < 1e-12


def test_wright_reduces_to_generalized_hypergeometric():
    rng = random.Random(13)
    for _ in range(10):
        a1, a2 = rng.uniform(0.5, 3.0), rng.uniform(0.5, 3.0)
        b1, b2 = rng.uniform(0.5, 3.0), rng.uniform(0.5, 3.0)
        z = rng.uniform(-2.0, 2.0)
        spec = WrightSeriesSpec(upper=[(a1, 1.0), (a2, 1.0)], lower=[(b1, 1.0), (b2, 1.0)])
        got = wright_psi(spec, z)
        # direct 2F2 sum times the gamma prefactor
        total = 0.0
        term = 1.0
        for n in range(200):
            total += term
            term *= (a1 + n) * (a2 + n) * z / ((b1 + n) * (b2 + n) * (n + 1.0))
        want = math.gamma(a1) * math.gamma(a2) / (math.gamma(b1) * math.gamma(b2)) * total
        assert rel_gap(got, want) < 1e-10


def test_wright_convergence_condition():
    with pytest.raises(DomainError):
        WrightSeriesSpec(upper=[(1.0, 2.0), (1.0, 1.5)], lower=[(1.0, 1.0)])
    with pytest.raises(DomainError):
        WrightSeriesSpec(upper=[(1.0, -1.0)], lower=[(1.0, 1.0)])


def test_wright_pole_in_lower_pair():
    spec = WrightSeriesSpec(upper=[(1.0, 1.0)], lower=[(-1.0, 1.0)])
    with pytest.raises(PoleError):
        wright_psi(spec, 0.5)


def test_wright_non_convergence_carries_partial():
    spec = WrightSeriesSpec(upper=[(1.0, 1.0)], lower=[(1.0, 1.0)])
    with pytest.raises(ConvergenceError) as err:
        wright_psi(spec, 1.0, SeriesControl(rel_tol=1e-12, consecutive_small=3, n_max=3))
    assert err.value.partial is not None
    assert 0.0 < err.value.partial < math.e


def test_series_control_validation():
    with pytest.raises(DomainError):
        SeriesControl(rel_tol=0.0)
    with pytest.raises(DomainError):
        SeriesControl(consecutive_small=0)
    with pytest.raises(DomainError):
        SeriesControl(n_max=2, consecutive_small=3)
