"""Acceptance suite: every exit criterion at its stated tolerance.

Each test prints one PASS/FAIL line (run pytest with -s or look at the
captured output).  Tolerances are pinned here and nowhere else.
"""

import cmath
import math
import time

import numpy as np
import pytest

from landaucs.coherent import (
    CS2DSpec,
    SU11Spec,
    cs2d_coefficients,
    eigen_residual_su11,
    eigen_residuals_2d,
    su11_coefficients,
)
from landaucs.fock import ScalarIndex, build_truncated, interior_mask
from landaucs.matrix_ops import PhaseParams, verify_matrix_algebra
from landaucs.model import (
    ModelParams,
    classical_ellipse,
    ellipse_distance,
    energy_level,
)
from landaucs.observables import (
    GridSpec,
    default_box,
    density_grid,
    locate_peak,
    mean_energy_su11,
    normalization_integral,
    peak_radius_along,
)
from landaucs.verify import moment_check, overlap_2d, overlap_su11, resolution_of_identity
from oracles import bessel_i_series, bessel_k_quadrature, scalar_gram_matrix
from landaucs.special import bessel_k, hyp0f1


def report(name, worst, tol, ok):
    print(f"[{'PASS' if ok else 'FAIL'}] {name}: worst {worst:.3e} (tol {tol:.1e})")
    assert ok, f"{name}: {worst} exceeds {tol}"


def test_acceptance_algebra_suite():
    t0 = time.monotonic()
    tol = 1e-12
    cutoff = 30
    ops = {w: build_truncated(w, cutoff).entries
           for w in ("A-", "A+", "B-", "B+", "Lz")}
    eye = np.eye((cutoff + 1) ** 2)
    mask = interior_mask(cutoff, margin=1)

    def dev(mat):
        return float(np.max(np.abs(mat[np.ix_(mask, mask)])))

    def comm(a, b):
        return ops[a] @ ops[b] - ops[b] @ ops[a]

    worst = max(
        dev(comm("A-", "A+") - eye),
        dev(comm("B-", "B+") - eye),
        dev(comm("A-", "B-")),
        dev(comm("A-", "B+")),
        dev(comm("A+", "B-")),
        dev(comm("A+", "B+")),
        dev(comm("Lz", "A+") - ops["A+"]),
        dev(comm("Lz", "A-") + ops["A-"]),
        dev(comm("Lz", "B+") + ops["B+"]),
        dev(comm("Lz", "B-") - ops["B-"]),
    )
    rep = verify_matrix_algebra(cutoff, PhaseParams())
    worst = max(worst, rep["max_interior_deviation"])
    elapsed = time.monotonic() - t0
    report("algebra suite (cutoff 30, interior block)", worst, tol,
           worst < tol and elapsed < 10.0)
    print(f"       runtime {elapsed:.2f} s (limit 10 s)")


def test_acceptance_spectrum_anchor():
    tol = 1e-12
    worst = 0.0
    for omega in (1.0, 2.0, 0.5):
        p = ModelParams(omega_b=omega)
        for n in range(0, 40):
            worst = max(worst, abs(energy_level(p, n)
                                   - math.sqrt(n * omega)))
        for m_z in range(1, 8):
            worst = max(worst, abs(mean_energy_su11(p, 0.0, m_z)
                                   - math.sqrt(m_z * omega)))
        for m_z in range(-7, 1):
            worst = max(worst, abs(mean_energy_su11(p, 0.0, m_z)))
    report("spectrum anchor (levels and tau=0 energies)", worst, tol,
           worst <= tol)


def test_acceptance_eigenstate_property():
    t0 = time.monotonic()
    tol = 1e-8
    rng = np.random.default_rng(2024)
    worst = 0.0
    for _ in range(9):
        a = complex(rng.uniform(-2.1, 2.1), rng.uniform(-2.1, 2.1))
        b = complex(rng.uniform(-2.1, 2.1), rng.uniform(-2.1, 2.1))
        res = eigen_residuals_2d(CS2DSpec(alpha=a, beta=b))
        worst = max(worst, res["A"], res["B"])
    for m_z in range(-3, 4):
        for tau in (1.0, 3.5j, 5.0, -3.0 + 4.0j):
            worst = max(worst, eigen_residual_su11(SU11Spec(tau=tau, m_z=m_z)))
    elapsed = time.monotonic() - t0
    report("coherent-state eigen residuals", worst, tol,
           worst < tol and elapsed < 30.0)
    print(f"       runtime {elapsed:.2f} s (limit 30 s)")


def test_acceptance_normalization():
    tol = 1e-6
    worst = 0.0
    for zeta in (0.5, 1.0, 1.5):
        p = ModelParams(omega_b=1.0, zeta=zeta)
        for state in (CS2DSpec(alpha=2.0, beta=5.0),
                      CS2DSpec(alpha=math.sqrt(2) * cmath.exp(1j * math.pi / 4),
                               beta=5.0),
                      SU11Spec(tau=3.0, m_z=1),
                      SU11Spec(tau=5.0, m_z=-2),
                      SU11Spec(tau=3.0, m_z=0)):
            worst = max(worst, abs(normalization_integral(p, state) - 1.0))
    report("density normalization (dx dy convention)", worst, tol, worst <= tol)

    gram_tol = 1e-8
    p = ModelParams(omega_b=1.0, zeta=1.2)
    gram, labels = scalar_gram_matrix(p, 8)
    dev = float(np.max(np.abs(gram - np.eye(len(labels)))))
    report("scalar Gram matrix (indices <= 8)", dev, gram_tol, dev <= gram_tol)


def test_acceptance_classical_correspondence():
    # beta = 5, omega_b = 1, zeta in {1/2, 3/2}; 200 x 200 grid framing the
    # state's canonical domain; the peak cell must touch the classical
    # ellipse to within one cell
    alpha = math.sqrt(2.0) * cmath.exp(1j * math.pi / 4.0)
    worst_cells = 0.0
    for zeta in (0.5, 1.5):
        p = ModelParams(omega_b=1.0, zeta=zeta)
        s = CS2DSpec(alpha=alpha, beta=5.0)
        e = classical_ellipse(p, alpha, 5.0)
        assert e.center.x == pytest.approx(
            2.0 * math.sqrt(zeta) * 5.0, rel=1e-12)
        expected_ecc = math.sqrt(1 - zeta ** 2) if zeta < 1 \
            else math.sqrt(1 - zeta ** -2)
        assert e.eccentricity == pytest.approx(expected_ecc, rel=1e-12)
        x0, x1, y0, y1 = default_box(p, s)
        g = GridSpec(x0, x1, 200, y0, y1, 200)
        fg = density_grid(p, s, g, cross_check=False)
        pt, _, _ = locate_peak(fg)
        cell = math.hypot(g.dx, g.dy)
        gap = max(0.0, ellipse_distance(e, pt) - 0.5 * cell)
        worst_cells = max(worst_cells, gap / cell)
    report("classical correspondence (peak on orbit within one cell)",
           worst_cells, 1.0, worst_cells <= 1.0)


def test_acceptance_su11_ring_property():
    ring_tol = 1e-8
    p = ModelParams(omega_b=1.0, zeta=0.5)
    s = SU11Spec(tau=3.0, m_z=1)
    import landaucs.observables as obs
    worst = 0.0
    for xi in (1.0, 2.2, 3.0):
        rho = 2.0 * xi / p.sqrt_omega
        ang = np.linspace(0.0, 2.0 * math.pi, 24, endpoint=False)
        X = p.sqrt_zeta * rho * np.cos(ang)
        Y = rho * np.sin(ang) / p.sqrt_zeta
        u, lo = obs._evaluate(p, s, X, Y, obs.DEFAULT_CONTROL, False)
        dens = np.abs(u) ** 2 + np.abs(lo) ** 2
        worst = max(worst, float((dens.max() - dens.min()) / dens.max()))
    report("su(1,1) density constant on xi contours", worst, ring_tol,
           worst <= ring_tol)

    for m_z in (1, -2):
        radii = [peak_radius_along(ModelParams(omega_b=1.0),
                                   SU11Spec(tau=t, m_z=m_z), 0.0, 16.0)
                 for t in (1.0, 3.0, 5.0)]
        ok = radii[0] < radii[1] < radii[2]
        print(f"[{'PASS' if ok else 'FAIL'}] su(1,1) peak radius grows with "
              f"|tau| (m_z={m_z}): {radii[0]:.3f} < {radii[1]:.3f} < {radii[2]:.3f}")
        assert ok
    r1 = peak_radius_along(ModelParams(omega_b=1.0), s, 0.0, 16.0)
    r2 = peak_radius_along(ModelParams(omega_b=2.0), s, 0.0, 16.0)
    ok = r2 < r1
    print(f"[{'PASS' if ok else 'FAIL'}] doubling omega_b shrinks the ring: "
          f"{r2:.3f} < {r1:.3f}")
    assert ok


def test_acceptance_appendix_suite():
    t0 = time.monotonic()
    moment_tol = 1e-6
    worst = 0.0
    for m_z in (0, 1, 2, -1, -3):
        kind = "f" if m_z >= 0 else "g"
        rep = moment_check(kind, m_z, list(range(max(0, m_z), 9)))
        worst = max(worst, rep.max_rel_err)
    report("moment identities (s <= 8)", worst, moment_tol, worst <= moment_tol)

    res_tol = 1e-4
    worst = resolution_of_identity("2d", max_index=6).max_deviation
    worst = max(worst, resolution_of_identity(
        "su11_pos", max_index=1 + 48, m_z=1).max_deviation)
    worst = max(worst, resolution_of_identity(
        "su11_neg", max_index=48, m_z=-2).max_deviation)
    report("resolution of identity (blocks <= 49)", worst, res_tol,
           worst <= res_tol)

    overlap_tol = 1e-9
    rng = np.random.default_rng(5)
    worst = 0.0
    for _ in range(4):
        a1, b1, a2, b2 = (complex(rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5))
                          for _ in range(4))
        c1 = cs2d_coefficients(CS2DSpec(alpha=a1, beta=b1), 40, 40)
        c2 = cs2d_coefficients(CS2DSpec(alpha=a2, beta=b2), 40, 40)
        keys = set(c1) | set(c2)
        brute = abs(sum(c1.get(k, 0j).conjugate() * c2.get(k, 0j) for k in keys))
        worst = max(worst, abs(overlap_2d(a1, b1, a2, b2) - brute))
    for m_z in (-2, 0, 1, 3):
        t1 = complex(rng.uniform(-2, 2), rng.uniform(-2, 2))
        t2 = complex(rng.uniform(-2, 2), rng.uniform(-2, 2))
        c1 = su11_coefficients(SU11Spec(tau=t1, m_z=m_z))
        c2 = su11_coefficients(SU11Spec(tau=t2, m_z=m_z))
        keys = set(c1) | set(c2)
        brute = abs(sum(c1.get(k, 0j).conjugate() * c2.get(k, 0j) for k in keys))
        worst = max(worst, abs(overlap_su11(t1, t2, m_z) - brute))
    elapsed = time.monotonic() - t0
    report("overlap kernels vs coefficient brute force", worst, overlap_tol,
           worst <= overlap_tol and elapsed < 120.0)
    print(f"       appendix-suite runtime {elapsed:.2f} s (limit 120 s)")


def test_acceptance_special_function_oracles():
    bessel_tol = 1e-9
    worst = 0.0
    for m in (0, 1, 3, 7):
        for x in np.logspace(-3, math.log10(50.0), 20):
            ref = bessel_k_quadrature(m, float(x))
            worst = max(worst, abs(bessel_k(m, float(x)) - ref) / abs(ref))
    report("bessel_k vs integral-representation quadrature", worst,
           bessel_tol, worst <= bessel_tol)

    hyp_tol = 1e-10
    worst = 0.0
    for (b, x, nu) in ((2.0, 1.0, 1), (1.0, 4.0, 0), (3.0, 2.25, 2),
                       (5.0, 9.0, 4)):
        # 0F1(; nu+1; x) = Gamma(nu+1) x^{-nu/2} I_nu(2 sqrt(x))
        ref = (math.gamma(nu + 1.0) * x ** (-nu / 2.0)
               * bessel_i_series(nu, 2.0 * math.sqrt(x)))
        worst = max(worst, abs(hyp0f1(b, x) - ref) / abs(ref))
    report("hyp0f1 vs modified-Bessel-I series", worst, hyp_tol,
           worst <= hyp_tol)
