"""Independent numerical oracles shared by the test modules.

Everything here deliberately avoids the library's own evaluation paths:
special functions come from integral representations or raw series,
inner products from quadrature, operator applications from finite
differences of the analytic wavefunctions.
"""

import math

import numpy as np
import scipy.integrate
from scipy.special import roots_laguerre

from landaucs.fock import ScalarIndex, psi_scalar
from landaucs.model import EllipticPoint, from_elliptic


def bessel_k_quadrature(order, x, epsrel=1e-13):
    """K_m(x) from the integral representation int_0^inf e^{-x cosh t} cosh(mt) dt."""
    m = abs(int(order))
    # past t = 60 the integrand has underflowed for any x >= 1e-4
    if m == 0:
        def f(t):
            return math.exp(-x * math.cosh(t)) if t < 60.0 else 0.0
    else:
        def f(t):
            if t >= 60.0:
                return 0.0
            # cosh(mt) written as e^{mt}(1 + e^{-2mt})/2 to avoid overflow
            return 0.5 * math.exp(m * t - x * math.cosh(t)) \
                * (1.0 + math.exp(-2.0 * m * t))
    val, err = scipy.integrate.quad(f, 0.0, np.inf, epsabs=0.0,
                                    epsrel=epsrel, limit=400)
    return val


def bessel_i_series(nu, x, terms=300):
    """Modified Bessel I_nu(x) by its ascending series (integer nu)."""
    total = 0.0
    for k in range(terms):
        log_t = ((2 * k + nu) * math.log(0.5 * x)
                 - math.lgamma(k + 1.0) - math.lgamma(k + nu + 1.0))
        t = math.exp(log_t)
        total += t
        if t < 1e-18 * total:
            break
    return total


def scalar_inner_product(p, idx1, idx2, n_radial=64, n_theta=48):
    """<psi_idx1 | psi_idx2> under dx dy, by Gauss-Laguerre x trapezoid.

    Radial variable u = xi^2, so rho drho = (2/omega_b) du and the
    Gaussian weight of the eigenfunctions matches the Laguerre weight.
    """
    u, w = roots_laguerre(n_radial)
    thetas = 2.0 * math.pi * np.arange(n_theta) / n_theta
    total = 0.0 + 0.0j
    for ui, wi in zip(u, w):
        rho = 2.0 * math.sqrt(ui) / p.sqrt_omega
        radial_weight = wi * math.exp(ui) * 2.0 / p.omega_b
        for th in thetas:
            pt = from_elliptic(p, EllipticPoint(rho=rho, theta=th, xi=math.sqrt(ui),
                                                z=complex(0)))
            v1 = psi_scalar(p, idx1, pt)
            v2 = psi_scalar(p, idx2, pt)
            total += radial_weight * (2.0 * math.pi / n_theta) * v1.conjugate() * v2
    return total


def scalar_gram_matrix(p, max_index, n_radial=48, n_theta=40):
    """Gram matrix of all psi_{m,n} with m, n <= max_index (vectorised)."""
    u, w = roots_laguerre(n_radial)
    thetas = 2.0 * math.pi * np.arange(n_theta) / n_theta
    pts = []
    weights = []
    for ui, wi in zip(u, w):
        rho = 2.0 * math.sqrt(ui) / p.sqrt_omega
        for th in thetas:
            pts.append(from_elliptic(
                p, EllipticPoint(rho=rho, theta=th, xi=math.sqrt(ui),
                                 z=complex(0))))
            weights.append(wi * math.exp(ui) * 2.0 / p.omega_b
                           * 2.0 * math.pi / n_theta)
    weights = np.asarray(weights)
    labels = [(m, n) for m in range(max_index + 1) for n in range(max_index + 1)]
    values = np.empty((len(labels), len(pts)), dtype=complex)
    for i, (m, n) in enumerate(labels):
        idx = ScalarIndex(m, n)
        values[i] = [psi_scalar(p, idx, pt) for pt in pts]
    return (values * weights) @ values.conj().T, labels


_STENCIL = (1.0, -8.0, 8.0, -1.0)  # f' ~ (f-2h -8f-h +8f+h -f+2h)/(12h)
_OFFSETS = (-2, -1, 1, 2)


def _deriv(f, x, h):
    return sum(c * f(x + o * h) for c, o in zip(_STENCIL, _OFFSETS)) / (12.0 * h)


def apply_ladder_fd(p, which, psi_fn, xi, theta, h=1e-3):
    """Apply a ladder operator's differential form by finite differences.

    psi_fn maps (xi, theta) -> complex.  Fourth-order central stencils keep
    the truncation error ~h^4 while staying clear of roundoff.
    """
    d_xi = _deriv(lambda s: psi_fn(s, theta), xi, h)
    d_th = _deriv(lambda s: psi_fn(xi, s), theta, h)
    val = psi_fn(xi, theta)
    if which == "A-":
        return 0.5 * np.exp(-1j * theta) * (d_xi - 1j * d_th / xi + xi * val)
    if which == "A+":
        return 0.5 * np.exp(1j * theta) * (-d_xi - 1j * d_th / xi + xi * val)
    if which == "B-":
        return 0.5 * np.exp(1j * theta) * (d_xi + 1j * d_th / xi + xi * val)
    if which == "B+":
        return 0.5 * np.exp(-1j * theta) * (-d_xi + 1j * d_th / xi + xi * val)
    raise ValueError(which)


def psi_on_chart(p, m, n):
    """psi_{m,n} as a function of the stretched polar coordinates."""
    idx = ScalarIndex(m, n)

    def fn(xi, theta):
        rho = 2.0 * xi / p.sqrt_omega
        pt = from_elliptic(p, EllipticPoint(rho=rho, theta=theta, xi=xi,
                                            z=complex(0)))
        return psi_scalar(p, idx, pt)

    return fn
