"""Coherent-state families: the 2D (two-eigenvalue) states and the
su(1,1) states at fixed angular momentum.

Two independent evaluation routes exist on purpose.  The closed forms
(cs2d_amplitude, fixed_n_cs) evaluate the summed analytic expressions
point by point; the coefficient expansions (cs2d_coefficients,
su11_coefficients, su11_amplitude) build the same states out of the basis
spinors.  Tests and the density cross-checks play the routes against each
other.

Amplitudes are unit-normalised under dx dy = rho drho dtheta by default:
the bare closed forms integrate to one under d^2 z instead, so they get a
sqrt(omega_b)/2 Jacobian factor unless paper_literal is set.
"""

import cmath
import math
from dataclasses import dataclass

from .model import ModelParams, PlanePoint, to_elliptic
from .special import (
    DEFAULT_CONTROL,
    ConvergenceError,
    SeriesControl,
    hyp0f1,
    log_factorial,
)
from .kernels.reference import tail_terms
from .spinors import SpinorLabel, SpinorValue, phi_state

__all__ = [
    "CS2DSpec",
    "SU11Spec",
    "cs2d_amplitude",
    "cs2d_coefficients",
    "su11_amplitude",
    "su11_coefficients",
    "fixed_n_cs",
    "fixed_n_weights",
]


@dataclass(frozen=True)
class CS2DSpec:
    """Joint eigenvalues (alpha, beta) plus the operator phases."""

    alpha: complex
    beta: complex
    delta: float = 0.0
    eta: float = 0.0

    @property
    def alpha_t(self):
        return complex(self.alpha) * cmath.exp(-1j * self.delta)

    @property
    def beta_eff(self):
        """Effective displacement eigenvalue.

        Joint eigenstates require a uniform B-phase across levels, which
        pins eta to 0 or pi; cos(eta) = -1 flips the sign of beta.
        """
        if abs(math.sin(self.eta)) > 1e-12:
            raise ValueError(
                "2D coherent states exist only for eta = 0 or pi; "
                f"got eta = {self.eta}")
        return complex(self.beta) / math.cos(self.eta)


@dataclass(frozen=True)
class SU11Spec:
    """su(1,1) eigenvalue tau on the fixed-m_z angular diagonal."""

    tau: complex
    m_z: int
    delta: float = 0.0

    @property
    def tau_t(self):
        return complex(self.tau) * cmath.exp(-1j * self.delta)


def _log_norm_2d(a_abs):
    a2 = a_abs * a_abs
    return math.log(math.pi) + a2 + math.log(2.0 - math.exp(-a2))


def _dxdy_log_scale(p: ModelParams, paper_literal):
    return 0.0 if paper_literal else math.log(0.5 * p.sqrt_omega)


def cs2d_amplitude(p: ModelParams, s: CS2DSpec, pt: PlanePoint,
                   ctl: SeriesControl = DEFAULT_CONTROL,
                   paper_literal=False) -> SpinorValue:
    """Closed-form 2D coherent state at a plane point.

    The lower component sums to pref * exp(alpha_t (z - beta)) exactly;
    the upper series is accumulated with rescaling and truncated once its
    certified tail drops below ctl.rel_tol.
    """
    z = to_elliptic(p, pt).z
    at = s.alpha_t
    bt = s.beta_eff
    w = z - bt
    q = at * w
    log_pref = ((bt - 0.5 * z) * z.conjugate()
                - 0.5 * abs(bt) ** 2
                - 0.5 * _log_norm_2d(abs(at))
                + _dxdy_log_scale(p, paper_literal))
    lower = 1j * cmath.exp(log_pref + q)

    n_hi = tail_terms(abs(q), ctl.rel_tol)
    if n_hi > ctl.max_terms:
        raise ConvergenceError(
            f"2D-CS series at |alpha (z-beta)| = {abs(q):.3g} needs ~{n_hi} "
            f"terms, above the cap {ctl.max_terms}",
            SpinorValue(upper=0.0j, lower=lower))
    t = at
    total = t
    off = 0.0
    for n in range(1, n_hi):
        t *= q / math.sqrt(n * (n + 1))
        total += t
        if abs(t) > 1e250:
            t *= 1e-250
            total *= 1e-250
            off += 250.0 * math.log(10.0)
    upper = cmath.exp(log_pref + off) * total
    return SpinorValue(upper=upper, lower=lower)


def cs2d_coefficients(s: CS2DSpec, n_max, m_max):
    """Basis-spinor coefficients of the 2D coherent state.

    c_{m,0} = e^{-|b|^2/2} b^m / sqrt(m! (2 e^{|a|^2} - 1)) and
    c_{m,n>=1} adds the factor sqrt(2) a^n / sqrt(n!), with a, b the
    phase-dressed eigenvalues.  Everything is assembled in log space.
    """
    if n_max < 0 or m_max < 0:
        raise ValueError("coefficient cutoffs must be nonnegative")
    at = s.alpha_t
    bt = s.beta_eff
    a_abs, b_abs = abs(at), abs(bt)
    a_ph = cmath.phase(at) if a_abs else 0.0
    b_ph = cmath.phase(bt) if b_abs else 0.0
    a2 = a_abs * a_abs
    log_norm = -0.5 * b_abs * b_abs - 0.5 * (a2 + math.log(2.0 - math.exp(-a2)))
    out = {}
    for m in range(m_max + 1):
        if b_abs == 0.0 and m > 0:
            break
        log_b = log_norm + (m * math.log(b_abs) if m else 0.0) - 0.5 * log_factorial(m)
        for n in range(n_max + 1):
            if a_abs == 0.0 and n > 0:
                break
            if n == 0:
                lg = log_b
            else:
                lg = (log_b + 0.5 * math.log(2.0)
                      + n * math.log(a_abs) - 0.5 * log_factorial(n))
            out[SpinorLabel(m, n)] = cmath.exp(complex(lg, m * b_ph + n * a_ph))
    return out


def su11_coefficients(s: SU11Spec, n_max=None,
                      ctl: SeriesControl = DEFAULT_CONTROL):
    """Basis-spinor coefficients of the su(1,1) coherent state.

    m_z >= 1 populates levels n >= m_z with
        sqrt(m_z!) tau_t^{n-m_z} / sqrt(n! (n-m_z)! 0F1(; m_z+1; |tau|^2));
    m_z <= 0 keeps the bare n = 0 term plus sqrt(2 (-m_z)!) tau_t^n /
    sqrt(n! (n-m_z)!), normalised by 2*0F1 - 1.
    """
    tt = s.tau_t
    t_abs = abs(tt)
    t_ph = cmath.phase(tt) if t_abs else 0.0
    m_z = s.m_z
    if n_max is None:
        n_max = max(0, m_z) + tail_terms(t_abs, ctl.rel_tol)
    out = {}
    if m_z >= 1:
        f01 = hyp0f1(m_z + 1, t_abs * t_abs, ctl)
        base = 0.5 * log_factorial(m_z) - 0.5 * math.log(f01)
        for n in range(m_z, n_max + 1):
            j = n - m_z
            if t_abs == 0.0 and j > 0:
                break
            lg = (base + (j * math.log(t_abs) if j else 0.0)
                  - 0.5 * log_factorial(n) - 0.5 * log_factorial(j))
            out[SpinorLabel(n - m_z, n)] = cmath.exp(complex(lg, j * t_ph))
        return out
    k = -m_z
    f01 = hyp0f1(k + 1, t_abs * t_abs, ctl)
    log_norm = -0.5 * math.log(2.0 * f01 - 1.0)
    out[SpinorLabel(k, 0)] = cmath.exp(complex(log_norm, 0.0))
    base = log_norm + 0.5 * (math.log(2.0) + log_factorial(k))
    for n in range(1, n_max + 1):
        if t_abs == 0.0:
            break
        lg = (base + n * math.log(t_abs)
              - 0.5 * log_factorial(n) - 0.5 * log_factorial(n + k))
        out[SpinorLabel(n + k, n)] = cmath.exp(complex(lg, n * t_ph))
    return out


def su11_amplitude(p: ModelParams, s: SU11Spec, pt: PlanePoint,
                   ctl: SeriesControl = DEFAULT_CONTROL) -> SpinorValue:
    """su(1,1) coherent state at a plane point, summed over basis spinors.

    This is the state-assembly route (coefficients times phi states); the
    grid kernels evaluate the same amplitude through its Laguerre series
    and are cross-checked against this one.
    """
    coeffs = su11_coefficients(s, ctl=ctl)
    up = 0.0 + 0.0j
    lo = 0.0 + 0.0j
    for lab, c in coeffs.items():
        sv = phi_state(p, lab.m_z, lab.n, pt)
        up += c * sv.upper
        lo += c * sv.lower
    return SpinorValue(upper=up, lower=lo)


def fixed_n_cs(p: ModelParams, beta, n, pt: PlanePoint,
               paper_literal=False) -> SpinorValue:
    """Displacement coherent state inside one energy level.

    Closed form (1/sqrt(2^{1-[n=0]} pi n!)) exp((beta - z/2) conj(z)
    - |beta|^2/2) (sqrt(n) w^{n-1}, i w^n) with w = z - beta, scaled to
    the dx dy convention unless paper_literal.
    """
    if n < 0 or int(n) != n:
        raise ValueError(f"level index must be a nonnegative integer, got {n}")
    n = int(n)
    beta = complex(beta)
    z = to_elliptic(p, pt).z
    w = z - beta
    log_pref = ((beta - 0.5 * z) * z.conjugate() - 0.5 * abs(beta) ** 2
                - 0.5 * ((1 - (n == 0)) * math.log(2.0) + math.log(math.pi)
                         + log_factorial(n))
                + _dxdy_log_scale(p, paper_literal))
    if n == 0:
        return SpinorValue(upper=0.0j, lower=1j * cmath.exp(log_pref))
    if w == 0.0:
        wp_low = 0.0j
        wp_up = 0.0j if n > 1 else complex(1.0)
    else:
        lw = cmath.log(w)
        wp_low = cmath.exp(n * lw)
        wp_up = cmath.exp((n - 1) * lw)
    pref = cmath.exp(log_pref)
    return SpinorValue(upper=pref * math.sqrt(n) * wp_up,
                       lower=1j * pref * wp_low)


def _map_residual(applied, coeffs, eigenvalue):
    """Relative L2 norm of (O c - eigenvalue c) over coefficient maps."""
    keys = set(applied) | set(coeffs)
    num = 0.0
    den = 0.0
    for lab in keys:
        a = applied.get(lab, 0.0 + 0.0j)
        c = coeffs.get(lab, 0.0 + 0.0j)
        num += abs(a - eigenvalue * c) ** 2
        den += abs(c) ** 2
    return math.sqrt(num / den)


def eigen_residuals_2d(s: CS2DSpec, ctl: SeriesControl = DEFAULT_CONTROL):
    """Relative eigen-equation residuals of the 2D coherent state.

    Applies the dressed lowering operators to the truncated coefficient
    expansion; both residuals sit at the truncation-tail level (far below
    1e-8 for |alpha|, |beta| <= 3).
    """
    from .matrix_ops import PhaseParams, apply_A_minus, apply_B_minus

    n_max = tail_terms(abs(s.alpha) ** 2, ctl.rel_tol)
    m_max = tail_terms(abs(s.beta) ** 2, ctl.rel_tol)
    coeffs = cs2d_coefficients(s, n_max, m_max)
    ph = PhaseParams(delta=s.delta, eta=s.eta)
    res_a = _map_residual(apply_A_minus(ph, coeffs), coeffs, complex(s.alpha))
    res_b = _map_residual(apply_B_minus(ph, coeffs), coeffs, complex(s.beta))
    return {"A": res_a, "B": res_b}


def eigen_residual_su11(s: SU11Spec, ctl: SeriesControl = DEFAULT_CONTROL):
    """Relative K- eigen-equation residual of the su(1,1) coherent state."""
    from .matrix_ops import PhaseParams, apply_K_minus

    coeffs = su11_coefficients(s, ctl=ctl)
    ph = PhaseParams(delta=s.delta, eta=0.0)
    return _map_residual(apply_K_minus(ph, coeffs), coeffs, complex(s.tau))


def fixed_n_weights(alpha_t, n_max):
    """Weights combining fixed-level states into the 2D coherent state.

    w_0 = 1/sqrt(2 e^{|a|^2} - 1), w_{n>=1} = sqrt(2) a^n / sqrt(n!) w_0.
    """
    a_abs = abs(alpha_t)
    a_ph = cmath.phase(alpha_t) if a_abs else 0.0
    a2 = a_abs * a_abs
    log_n = -0.5 * (a2 + math.log(2.0 - math.exp(-a2)))
    weights = [cmath.exp(complex(log_n, 0.0))]
    for n in range(1, n_max + 1):
        if a_abs == 0.0:
            weights.append(0.0j)
            continue
        lg = log_n + 0.5 * math.log(2.0) + n * math.log(a_abs) - 0.5 * log_factorial(n)
        weights.append(cmath.exp(complex(lg, n * a_ph)))
    return weights
