"""Overlap kernels, completeness measures, moment identities."""

import math

import numpy as np
import pytest
import scipy.integrate

from landaucs.coherent import CS2DSpec, SU11Spec, cs2d_coefficients, su11_coefficients
from landaucs.special import hyp0f1
from landaucs.verify import (
    measure_weight,
    moment_check,
    overlap_2d,
    overlap_su11,
    resolution_of_identity,
)

RNG = np.random.default_rng(17)


def coeff_overlap(c1, c2):
    keys = set(c1) | set(c2)
    return abs(sum(c1.get(k, 0.0j).conjugate() * c2.get(k, 0.0j) for k in keys))


def test_overlap_2d_normalization_and_positivity():
    assert overlap_2d(1 + 1j, 2.0, 1 + 1j, 2.0) == pytest.approx(1.0, rel=1e-12)
    for _ in range(20):
        a1, b1, a2, b2 = (complex(RNG.normal(), RNG.normal()) for _ in range(4))
        val = overlap_2d(a1, b1, a2, b2)
        assert val > 0.0


def test_overlap_2d_symmetry():
    for _ in range(10):
        a1, b1, a2, b2 = (complex(RNG.normal(), RNG.normal()) for _ in range(4))
        assert overlap_2d(a1, b1, a2, b2) == pytest.approx(
            overlap_2d(a2, b2, a1, b1), rel=1e-12)


def test_overlap_2d_coefficient_oracle():
    for _ in range(6):
        a1, b1, a2, b2 = (complex(RNG.uniform(-1.5, 1.5), RNG.uniform(-1.5, 1.5))
                          for _ in range(4))
        c1 = cs2d_coefficients(CS2DSpec(alpha=a1, beta=b1), 40, 40)
        c2 = cs2d_coefficients(CS2DSpec(alpha=a2, beta=b2), 40, 40)
        brute = coeff_overlap(c1, c2)
        assert overlap_2d(a1, b1, a2, b2) == pytest.approx(brute, abs=1e-9)


def test_overlap_su11_normalization_and_limits():
    for m_z in (-2, 0, 1, 3):
        assert overlap_su11(1.5 + 1j, 1.5 + 1j, m_z) == pytest.approx(1.0, rel=1e-12)
    # tau' = 0 against tau for the excited sector: 1/sqrt(0F1)
    for m_z in (1, 4):
        tau = 2.0
        expected = 1.0 / math.sqrt(hyp0f1(m_z + 1, abs(tau) ** 2))
        assert overlap_su11(0.0, tau, m_z) == pytest.approx(expected, rel=1e-12)


def test_overlap_su11_coefficient_oracle():
    for m_z in (-3, -1, 0, 2):
        for _ in range(4):
            t1 = complex(RNG.uniform(-2, 2), RNG.uniform(-2, 2))
            t2 = complex(RNG.uniform(-2, 2), RNG.uniform(-2, 2))
            c1 = su11_coefficients(SU11Spec(tau=t1, m_z=m_z))
            c2 = su11_coefficients(SU11Spec(tau=t2, m_z=m_z))
            brute = coeff_overlap(c1, c2)
            assert overlap_su11(t1, t2, m_z) == pytest.approx(brute, abs=1e-9)


def test_measure_weight_values_and_symmetry():
    # f integrates to 1 over t = |tau|^2 for m_z = 0
    val, _ = scipy.integrate.quad(
        lambda t: measure_weight("f", math.sqrt(t), 0), 0.0, np.inf, limit=200)
    assert val == pytest.approx(1.0, abs=1e-8)
    for m in (0, 1, 3):
        for t in (0.1, 1.0, 4.0):
            assert measure_weight("g", t, -m) == pytest.approx(
                measure_weight("f", t, m), rel=1e-13)
            assert measure_weight("f", t, m) > 0.0


def test_measure_weight_domain():
    with pytest.raises(ValueError):
        measure_weight("f", 1.0, -1)
    with pytest.raises(ValueError):
        measure_weight("g", 1.0, 2)
    with pytest.raises(ValueError):
        measure_weight("f", 0.0, 1)
    with pytest.raises(ValueError):
        measure_weight("h", 1.0, 0)


def test_moment_check_hand_targets():
    rep = moment_check("f", 0, [0])
    assert rep.rows[0][1] == pytest.approx(1.0)
    rep = moment_check("f", 2, [3])
    assert rep.rows[0][1] == pytest.approx(3.0)
    rep = moment_check("g", -1, [2])
    assert rep.rows[0][1] == pytest.approx(12.0)
    for row in rep.rows:
        assert row[3] < 1e-10


def test_moment_check_sweep():
    for m_z in (0, 1, 2, -1, -3):
        kind = "f" if m_z >= 0 else "g"
        s_list = list(range(max(0, m_z), 9))
        rep = moment_check(kind, m_z, s_list)
        assert rep.max_rel_err < 1e-6
        assert rep.passed(1e-6)


def test_moment_check_domain():
    with pytest.raises(ValueError):
        moment_check("f", 2, [1])  # s - m_z + 1 <= 0
    with pytest.raises(ValueError):
        moment_check("g", 2, [1])


def test_resolution_2d():
    rep = resolution_of_identity("2d", max_index=4)
    assert rep.max_deviation < 1e-4
    assert rep.off_diagonal == 0.0
    # actually much better: the integrand is polynomial against the weight
    assert rep.max_deviation < 1e-12


def test_resolution_su11_pos():
    rep = resolution_of_identity("su11_pos", max_index=7, m_z=1)
    assert rep.max_deviation < 1e-4
    rep = resolution_of_identity("su11_pos", max_index=6, m_z=0)
    assert rep.max_deviation < 1e-4


def test_resolution_su11_neg():
    rep = resolution_of_identity("su11_neg", max_index=6, m_z=-2)
    assert rep.max_deviation < 1e-4
    rep = resolution_of_identity("su11_neg", max_index=6, m_z=0)
    assert rep.max_deviation < 1e-4


def test_resolution_quadrature_convergence():
    # halving the radial resolution changes the answer by less than the
    # reported deviation itself
    fine = resolution_of_identity("su11_neg", max_index=6, m_z=-2, nodes=256)
    coarse = resolution_of_identity("su11_neg", max_index=6, m_z=-2, nodes=128)
    for n in fine.entries:
        delta = abs(fine.entries[n] - coarse.entries[n])
        assert delta <= max(abs(coarse.entries[n]), 1e-12)


def test_resolution_validation():
    with pytest.raises(ValueError):
        resolution_of_identity("su11_pos", max_index=5, m_z=-1)
    with pytest.raises(ValueError):
        resolution_of_identity("su11_neg", max_index=5, m_z=1)
    with pytest.raises(ValueError):
        resolution_of_identity("su11_pos", max_index=5)
    with pytest.raises(ValueError):
        resolution_of_identity("ring", max_index=5, m_z=0)


def test_angular_uniform_quadrature_is_kronecker():
    # the analytic angular delta used by the reconstruction: uniform
    # quadrature of e^{i(p-q)chi} over [0, 2pi) vanishes unless p = q
    n_theta = 64
    chi = 2.0 * math.pi * np.arange(n_theta) / n_theta
    for p_minus_q in range(-8, 9):
        val = np.exp(1j * p_minus_q * chi).sum() / n_theta
        expected = 1.0 if p_minus_q == 0 else 0.0
        assert abs(val - expected) < 1e-14
