"""Physical parameters, elliptic coordinates and the classical orbit.

Working units put hbar = v'_F = 1, so energies come out as multiples of
hbar*v'_F and the only scales left are the cyclotron frequency omega_b
(an inverse squared length) and the dimensionless velocity anisotropy
zeta = v_x / v_y.
"""

import cmath
import math
from dataclasses import dataclass

__all__ = [
    "ModelParams",
    "PlanePoint",
    "EllipticPoint",
    "ClassicalEllipse",
    "to_elliptic",
    "from_elliptic",
    "energy_level",
    "classical_ellipse",
    "ellipse_point",
    "ellipse_distance",
]

_TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class ModelParams:
    """Magnetic-field and anisotropy configuration.

    omega_b: cyclotron frequency, > 0.
    zeta: Fermi-velocity ratio v_x/v_y, > 0 (1 means isotropic).
    energy_scale: hbar*v'_F multiplier applied when reporting energies.
    """

    omega_b: float = 1.0
    zeta: float = 1.0
    energy_scale: float = 1.0

    def __post_init__(self):
        if not (self.omega_b > 0.0 and math.isfinite(self.omega_b)):
            raise ValueError(f"omega_b must be positive, got {self.omega_b}")
        if not (self.zeta > 0.0 and math.isfinite(self.zeta)):
            raise ValueError(f"zeta must be positive, got {self.zeta}")

    @property
    def sqrt_omega(self):
        return math.sqrt(self.omega_b)

    @property
    def sqrt_zeta(self):
        return math.sqrt(self.zeta)


@dataclass(frozen=True)
class PlanePoint:
    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"plane point must be finite, got ({self.x}, {self.y})")


@dataclass(frozen=True)
class EllipticPoint:
    """A plane point in the stretched polar coordinates.

    rho is the elliptic radius, theta in [0, 2pi) the elliptic angle,
    xi = (sqrt(omega_b)/2) rho the dimensionless radius and z = xi e^{i theta}
    the complex combination used by the coherent-state closed forms.
    """

    rho: float
    theta: float
    xi: float
    z: complex


@dataclass(frozen=True)
class ClassicalEllipse:
    """Geometry of the classical cyclotron orbit on the xy-plane."""

    center: PlanePoint
    semi_axis_x: float
    semi_axis_y: float
    eccentricity: float


def to_elliptic(p: ModelParams, pt: PlanePoint) -> EllipticPoint:
    """Map (x, y) to the stretched polar chart.

    x = sqrt(zeta) rho cos(theta), y = rho sin(theta)/sqrt(zeta); the angle
    is wrapped onto [0, 2pi).
    """
    sz = p.sqrt_zeta
    xs = pt.x / sz          # rho cos(theta)
    ys = pt.y * sz          # rho sin(theta)
    rho = math.hypot(xs, ys)
    theta = math.atan2(ys, xs)
    if theta < 0.0:
        theta += _TWO_PI
    xi = 0.5 * p.sqrt_omega * rho
    z = 0.5 * p.sqrt_omega * complex(xs, ys)
    return EllipticPoint(rho=rho, theta=theta, xi=xi, z=z)


def from_elliptic(p: ModelParams, ep: EllipticPoint) -> PlanePoint:
    sz = p.sqrt_zeta
    return PlanePoint(
        x=sz * ep.rho * math.cos(ep.theta),
        y=ep.rho * math.sin(ep.theta) / sz,
    )


def energy_level(p: ModelParams, n, band=+1):
    """Landau-level energy +/- hbar v'_F sqrt(n omega_b)."""
    if n < 0 or int(n) != n:
        raise ValueError(f"level index must be a nonnegative integer, got {n}")
    if band not in (+1, -1):
        raise ValueError(f"band must be +1 or -1, got {band}")
    return band * p.energy_scale * math.sqrt(n * p.omega_b)


def classical_ellipse(p: ModelParams, alpha, beta) -> ClassicalEllipse:
    """Orbit geometry encoded by the coherent-state eigenvalues.

    beta fixes the orbit center, |alpha| the size; alpha = 0 degenerates to
    a point, which is allowed.  The eccentricity depends on zeta alone.
    """
    alpha = complex(alpha)
    beta = complex(beta)
    sw = p.sqrt_omega
    sz = p.sqrt_zeta
    phi = cmath.phase(beta)
    b_abs = abs(beta)
    center = PlanePoint(
        x=2.0 * sz * b_abs * math.cos(phi) / sw,
        y=2.0 * b_abs * math.sin(phi) / (sz * sw),
    )
    a_abs = abs(alpha)
    ax = 2.0 * sz * a_abs / sw
    ay = 2.0 * a_abs / (sz * sw)
    if p.zeta < 1.0:
        ecc = math.sqrt(1.0 - p.zeta * p.zeta)
    elif p.zeta > 1.0:
        ecc = math.sqrt(1.0 - 1.0 / (p.zeta * p.zeta))
    else:
        ecc = 0.0
    return ClassicalEllipse(center=center, semi_axis_x=ax, semi_axis_y=ay,
                            eccentricity=ecc)


def ellipse_point(e: ClassicalEllipse, t: float) -> PlanePoint:
    """Parametric point (x0 + a_x cos t, y0 + a_y sin t)."""
    return PlanePoint(
        x=e.center.x + e.semi_axis_x * math.cos(t),
        y=e.center.y + e.semi_axis_y * math.sin(t),
    )


def ellipse_distance(e: ClassicalEllipse, pt: PlanePoint, samples=4096):
    """Distance from pt to the orbit curve (dense sampling + local refine)."""
    best_t = 0.0
    best = math.inf
    for i in range(samples):
        t = _TWO_PI * i / samples
        q = ellipse_point(e, t)
        d = math.hypot(q.x - pt.x, q.y - pt.y)
        if d < best:
            best, best_t = d, t
    # golden-section polish around the best sample
    lo = best_t - _TWO_PI / samples
    hi = best_t + _TWO_PI / samples
    for _ in range(60):
        m1 = lo + 0.381966011 * (hi - lo)
        m2 = hi - 0.381966011 * (hi - lo)
        q1 = ellipse_point(e, m1)
        q2 = ellipse_point(e, m2)
        if math.hypot(q1.x - pt.x, q1.y - pt.y) <= math.hypot(q2.x - pt.x, q2.y - pt.y):
            hi = m2
        else:
            lo = m1
    q = ellipse_point(e, 0.5 * (lo + hi))
    return min(best, math.hypot(q.x - pt.x, q.y - pt.y))
