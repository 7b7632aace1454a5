"""NumPy reference implementation of the grid-evaluation kernels.

These are the hot loops behind density grids: given arrays of grid points
they return the two spinor components of a coherent state at every point.
The compiled extension (kernels._fast) implements the same contracts; this
module is the always-available fallback and the ground truth the extension
is tested and benchmarked against.

Number ranges: the 2D-family series is accumulated with per-point
rescaling, so any |alpha (z - beta)| stays finite; the su(1,1) ladders are
evaluated raw, with points at xi^2 > 1250 clamped to exact zero (tight to
< 1e-140 of the peak amplitude for the supported |tau| <= 20, |m_z| <= 40
envelope).
"""

import cmath
import math

import numpy as np

from ..special import ConvergenceError

BACKEND_NAME = "numpy"

_RESCALE = 1e-250
_LOG_RESCALE = -math.log(_RESCALE)
_U_MAX = 1250.0
_TAU_MAX = 20.0
_MZ_MAX = 40


def tail_terms(lam, rel_tol=1e-14):
    """Series window for terms bounded by lam^n/n! (Poisson-type tail).

    Chernoff sizing: the dropped tail stays below ~1e-8 * rel_tol relative
    to the peak term.
    """
    width = max(12.0, math.sqrt(2.0 * math.log(1e8 / rel_tol)))
    return int(math.ceil(lam + width * math.sqrt(lam + 1.0) + 30.0))


def _log_norm_2d(a_abs):
    # ln(pi (2 e^{a^2} - 1)) without forming e^{a^2}
    a2 = a_abs * a_abs
    return math.log(math.pi) + a2 + math.log(2.0 - math.exp(-a2))


def cs2d_fields(z, alpha_t, beta, rel_tol=1e-14, max_terms=10_000,
                dxdy_scale=1.0):
    """Two spinor components of the 2D coherent state on an array of z.

    Evaluates the closed-form expansion

        pref(z) * sum_n (alpha_t^n/n!) (sqrt(n) w^{n-1}, i w^n),
        w = z - beta,
        pref = exp((beta - z/2) conj(z) - |beta|^2/2) / sqrt(pi(2e^{|a|^2}-1)),

    times dxdy_scale (sqrt(omega_b)/2 for unit norm under dx dy, 1.0 for
    the bare printed form).  The lower-component series sums to
    exp(alpha_t w) exactly; the upper one is accumulated with per-point
    rescaling so large |alpha_t w| cannot overflow.
    """
    z = np.asarray(z, dtype=complex)
    alpha_t = complex(alpha_t)
    beta = complex(beta)
    w = z - beta
    q = alpha_t * w
    log_pref = ((beta - 0.5 * z) * np.conj(z)
                - 0.5 * abs(beta) ** 2
                - 0.5 * _log_norm_2d(abs(alpha_t))
                + math.log(dxdy_scale))
    lower = 1j * np.exp(log_pref + q)

    q_max = float(np.max(np.abs(q))) if q.size else 0.0
    n_hi = tail_terms(q_max, rel_tol)
    if n_hi > max_terms:
        raise ConvergenceError(
            f"2D-CS series needs ~{n_hi} terms (|alpha (z-beta)| up to "
            f"{q_max:.3g}), above the cap {max_terms}", None)

    # t_n = sqrt(n) alpha_t^n w^{n-1}/n!, starting from t_1 = alpha_t
    t = np.full(z.shape, alpha_t, dtype=complex)
    total = t.copy()
    off = np.zeros(z.shape, dtype=float)
    for n in range(1, n_hi):
        t = t * (q / math.sqrt(n * (n + 1)))
        total += t
        if n % 8 == 0:
            big = np.abs(t) > 1e250
            if big.any():
                t[big] *= _RESCALE
                total[big] *= _RESCALE
                off[big] += _LOG_RESCALE
    upper = np.exp(log_pref + off) * total
    return upper, lower


def _laguerre_sum(u, k, tau_t, j_hi, log_coeff, first_j=0):
    """sum_{j >= first_j} e^{log_coeff(j)} (-tau_t/|tau_t|)^j L_{j-first_j}^k(u).

    log_coeff supplies ln of the positive coefficient magnitude including
    the |tau_t|^j power; the ladder ascends in the Laguerre degree, which
    is stable for k >= 0, u >= 0.  tau_t = 0 keeps only the first term.
    """
    total = np.zeros(u.shape, dtype=complex)
    att = abs(tau_t)
    ph = cmath.phase(-tau_t) if att > 0.0 else 0.0
    lag_prev = np.zeros(u.shape)
    lag_cur = np.ones(u.shape)  # L_0^k
    for j in range(first_j, j_hi + 1):
        if att == 0.0 and j > 0:
            break
        total = total + cmath.exp(complex(log_coeff(j), j * ph)) * lag_cur
        deg = j - first_j
        nxt = ((2 * deg + k + 1 - u) * lag_cur - (deg + k) * lag_prev) / (deg + 1)
        lag_prev, lag_cur = lag_cur, nxt
    return total


def su11_fields(xi, theta, tau_t, m_z, omega_b, rel_tol=1e-14,
                max_terms=10_000):
    """Two spinor components of the su(1,1) coherent state on a grid.

    xi and theta are arrays over the stretched polar chart; the output is
    unit-normalised under dx dy.  m_z >= 1 selects the excited sector, any
    m_z <= 0 the zero-energy one.
    """
    xi = np.asarray(xi, dtype=float)
    theta = np.asarray(theta, dtype=float)
    tau_t = complex(tau_t)
    att = abs(tau_t)
    if att > _TAU_MAX:
        raise ValueError(
            f"|tau| = {att:.3g} outside the supported envelope (<= {_TAU_MAX})")
    if abs(m_z) > _MZ_MAX:
        raise ValueError(
            f"|m_z| = {abs(m_z)} outside the supported envelope (<= {_MZ_MAX})")
    j_hi = tail_terms(att, rel_tol)
    if j_hi > max_terms:
        raise ConvergenceError(
            f"su(1,1) series needs ~{j_hi} terms, above the cap {max_terms}",
            None)

    upper = np.zeros(xi.shape, dtype=complex)
    lower = np.zeros(xi.shape, dtype=complex)
    live = xi * xi <= _U_MAX
    uu = (xi * xi)[live]
    xl = xi[live]
    th = theta[live]
    t2 = att * att
    log_att = math.log(att) if att > 0.0 else 0.0  # guarded by j = 0 shortcut

    if m_z >= 1:
        f01 = _hyp0f1_float(m_z + 1, t2, rel_tol, max_terms)
        log_c = (0.5 * (math.log(omega_b) + math.lgamma(m_z + 1)
                        - math.log(4.0 * math.pi))
                 - 0.5 * (math.log(2.0) + math.log(f01)))
        s_low = _laguerre_sum(
            uu, m_z, tau_t, j_hi,
            lambda j: j * log_att - math.lgamma(j + m_z + 1))
        s_up = _laguerre_sum(
            uu, m_z - 1, tau_t, j_hi,
            lambda j: j * log_att - 0.5 * math.log(j + m_z) - math.lgamma(j + m_z))
        base = np.exp(log_c - 0.5 * uu)
        lower[live] = 1j * base * np.power(xl, m_z) * np.exp(1j * m_z * th) * s_low
        upper[live] = base * np.power(xl, m_z - 1) * np.exp(1j * (m_z - 1) * th) * s_up
        return upper, lower

    k = -m_z
    f01 = _hyp0f1_float(k + 1, t2, rel_tol, max_terms)
    log_d = (0.5 * (math.log(omega_b) - math.log(4.0 * math.pi))
             - 0.5 * math.log(2.0 * f01 - 1.0))
    hk = 0.5 * math.lgamma(k + 1)
    # bracket = 1/sqrt(k!) + sqrt(k!) sum_{n>=1} (-tau)^n L_n^k(u)/(n+k)!
    s_low = _laguerre_sum(
        uu, k, tau_t, j_hi,
        lambda j: j * log_att - math.lgamma(j + k + 1))
    s_low = s_low - math.exp(-math.lgamma(k + 1))  # remove the n = 0 term
    s_up = _laguerre_sum(
        uu, k + 1, tau_t, j_hi,
        lambda j: j * log_att - 0.5 * math.log(j) - math.lgamma(j + k + 1),
        first_j=1)
    base = np.exp(log_d - 0.5 * uu)
    bracket = math.exp(-hk) + math.exp(hk) * s_low
    lower[live] = 1j * base * np.power(xl, k) * np.exp(1j * m_z * th) * bracket
    upper[live] = (-base * math.exp(hk) * np.power(xl, k + 1)
                   * np.exp(1j * (m_z - 1) * th) * s_up)
    return upper, lower


def _hyp0f1_float(b, x, rel_tol, max_terms):
    total = 1.0
    term = 1.0
    for n in range(max_terms):
        term *= x / ((b + n) * (n + 1))
        total += term
        if term <= rel_tol * total:
            return total
    raise ConvergenceError(f"0F1(;{b};{x}) did not converge", total)
