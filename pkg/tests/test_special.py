"""Special-function unit tests against independent oracles."""

import math

import numpy as np
import pytest

from landaucs.special import (
    ConvergenceError,
    SeriesControl,
    bessel_k,
    bessel_k_scaled,
    hyp0f1,
    hyp0f1_complex,
    laguerre_assoc,
    pochhammer_log,
)
from oracles import bessel_i_series, bessel_k_quadrature


def test_laguerre_low_orders_exact():
    assert laguerre_assoc(0, 5, 3.7) == 1.0
    for k in (0, 1, 7):
        for x in (-2.0, 0.0, 4.25):
            assert laguerre_assoc(1, k, x) == pytest.approx(1 + k - x, abs=0.0)
    # L_2^0(x) = (x^2 - 4x + 2)/2, evaluated at x = 1
    assert laguerre_assoc(2, 0, 1.0) == pytest.approx(-0.5, rel=1e-15)


def test_laguerre_recurrence_consistency():
    rng = np.random.default_rng(42)
    for _ in range(200):
        n = int(rng.integers(1, 61))
        k = int(rng.integers(0, 21))
        x = float(rng.uniform(-50.0, 50.0))
        lhs = (n + 1) * laguerre_assoc(n + 1, k, x)
        rhs = ((2 * n + k + 1 - x) * laguerre_assoc(n, k, x)
               - (n + k) * laguerre_assoc(n - 1, k, x))
        scale = max(abs(lhs), abs(rhs), 1.0)
        assert abs(lhs - rhs) <= 1e-12 * scale


def test_laguerre_domain_errors():
    with pytest.raises(ValueError):
        laguerre_assoc(-1, 0, 1.0)
    with pytest.raises(ValueError):
        laguerre_assoc(2, -1, 1.0)
    with pytest.raises(ValueError):
        laguerre_assoc(2, 0, math.inf)


def test_pochhammer_values():
    assert pochhammer_log(3.7, 0) == 0.0
    assert pochhammer_log(1.0, 4) == pytest.approx(math.log(24.0), rel=1e-15)
    assert pochhammer_log(3.0, 2) == pytest.approx(math.log(12.0), rel=1e-15)
    with pytest.raises(ValueError):
        pochhammer_log(0.0, 3)
    with pytest.raises(ValueError):
        pochhammer_log(-2.0, 3)


def test_pochhammer_ratio_property():
    rng = np.random.default_rng(7)
    for _ in range(100):
        a = float(rng.uniform(0.5, 30.0))
        k = int(rng.integers(0, 40))
        step = pochhammer_log(a, k + 1) - pochhammer_log(a, k)
        assert abs(step - math.log(a + k)) <= 1e-13 * max(1.0, abs(step))


def test_hyp0f1_trivial_and_bessel_identity():
    assert hyp0f1(3.2, 0.0) == 1.0
    # 0F1(; nu+1; x^2/4) = (x/2)^{-nu} Gamma(nu+1) I_nu(x)
    val = hyp0f1(2.0, 1.0)
    ref = bessel_i_series(1, 2.0) / 1.0  # (2/2)^{-1} * 1! * I_1(2)
    assert val == pytest.approx(ref, rel=1e-10)
    assert val == pytest.approx(1.5906368546373291, rel=1e-6)
    val = hyp0f1(1.0, 4.0)
    assert val == pytest.approx(bessel_i_series(0, 4.0), rel=1e-10)
    assert val == pytest.approx(11.301921952136331, rel=1e-6)


def test_hyp0f1_monotone_partial_sums_and_cap_stability():
    # all terms positive: looser tolerance can only stop earlier, and the
    # converged value moves by less than rel_tol when the cap doubles
    loose = hyp0f1(2.0, 9.0, SeriesControl(rel_tol=1e-8, max_terms=50))
    tight = hyp0f1(2.0, 9.0, SeriesControl(rel_tol=1e-8, max_terms=100))
    assert loose <= tight * (1 + 1e-8)
    assert abs(tight - loose) <= 1e-8 * tight


def test_hyp0f1_convergence_error_carries_partial():
    with pytest.raises(ConvergenceError) as err:
        hyp0f1(1.0, 50.0, SeriesControl(rel_tol=1e-14, max_terms=3))
    assert err.value.partial > 1.0


def test_hyp0f1_domain():
    with pytest.raises(ValueError):
        hyp0f1(0.0, 1.0)
    with pytest.raises(ValueError):
        hyp0f1(2.0, -1.0)


def test_hyp0f1_complex_matches_real_axis():
    for b in (1.0, 3.0):
        for x in (0.5, 4.0, 30.0):
            assert hyp0f1_complex(b, complex(x)) == pytest.approx(
                hyp0f1(b, x), rel=1e-13)


def test_bessel_k_frozen_values():
    # from the integral-representation quadrature oracle
    assert bessel_k(0, 2.0) == pytest.approx(0.11389387274953343, rel=1e-10)
    assert bessel_k(1, 1.0) == pytest.approx(0.6019072301972346, rel=1e-10)


def test_bessel_k_order_symmetry():
    for m in (1, 3, 8):
        for x in (0.05, 1.0, 17.0):
            assert bessel_k(-m, x) == bessel_k(m, x)


def test_bessel_k_against_quadrature_oracle():
    xs = np.logspace(-3, math.log10(50.0), 20)
    for m in (0, 1, 2, 5, 9):
        for x in xs:
            ours = bessel_k(m, float(x))
            ref = bessel_k_quadrature(m, float(x))
            assert abs(ours - ref) <= 1e-9 * abs(ref), (m, x)


def test_bessel_k_scaled_consistency():
    for x in (0.01, 1.5, 40.0):
        assert bessel_k_scaled(2, x) == pytest.approx(
            bessel_k(2, x) * math.exp(x), rel=1e-12)


def test_bessel_k_domain():
    with pytest.raises(ValueError):
        bessel_k(0, 0.0)
    with pytest.raises(ValueError):
        bessel_k(0, -1.0)


def test_series_control_validation():
    with pytest.raises(ValueError):
        SeriesControl(rel_tol=0.0)
    with pytest.raises(ValueError):
        SeriesControl(max_terms=0)
