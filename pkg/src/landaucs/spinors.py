"""Two-component conduction-band eigenstates and their angular labels.

A spinor state pairs the scalar levels (m, n-1) and (m, n); the n = 0
family has no upper component and needs no 1/sqrt(2).  States are also
labelled by the diagonal quantum number m_z = n - m and carry the total
angular momentum eigenvalue j = m_z - 1/2.  m_z = 0 is bookkept in the
lower sector, whose ladder ground states have zero energy.
"""

from dataclasses import dataclass

from .fock import ScalarIndex, psi_scalar
from .model import ModelParams, PlanePoint

__all__ = [
    "SpinorValue",
    "SpinorLabel",
    "spinor_state",
    "phi_state",
    "jz_eigenvalue",
    "sector",
]

_SQRT1_2 = 0.7071067811865475244


@dataclass(frozen=True)
class SpinorValue:
    upper: complex
    lower: complex

    def density(self):
        return abs(self.upper) ** 2 + abs(self.lower) ** 2


@dataclass(frozen=True)
class SpinorLabel:
    """Quantum labels (m, n) of a basis spinor, with derived m_z and j."""

    m: int
    n: int

    def __post_init__(self):
        if self.m < 0 or self.n < 0:
            raise ValueError(f"labels must be nonnegative, got ({self.m}, {self.n})")

    @property
    def m_z(self):
        return self.n - self.m

    @property
    def j(self):
        return self.m_z - 0.5

    @property
    def sector(self):
        # m_z = 0 goes with the zero-energy ladder ground states
        return "upper" if self.m_z >= 1 else "lower"


def sector(m_z):
    """Which angular sector a diagonal belongs to ('upper' iff m_z >= 1)."""
    return "upper" if m_z >= 1 else "lower"


def jz_eigenvalue(m, n):
    """Total angular momentum j = (n - m) - 1/2."""
    if m < 0 or n < 0:
        raise ValueError(f"labels must be nonnegative, got ({m}, {n})")
    return (n - m) - 0.5


def spinor_state(p: ModelParams, m, n, pt: PlanePoint) -> SpinorValue:
    """Basis spinor at a plane point.

    (psi_{m,n-1}, i psi_{m,n})/sqrt(2) for n >= 1, and (0, i psi_{m,0})
    for n = 0.
    """
    if n == 0:
        return SpinorValue(upper=0.0 + 0.0j,
                           lower=1j * psi_scalar(p, ScalarIndex(m, 0), pt))
    up = psi_scalar(p, ScalarIndex(m, n - 1), pt)
    lo = psi_scalar(p, ScalarIndex(m, n), pt)
    return SpinorValue(upper=_SQRT1_2 * up, lower=1j * _SQRT1_2 * lo)


def phi_state(p: ModelParams, m_z, n, pt: PlanePoint) -> SpinorValue:
    """Basis spinor addressed by its diagonal labels (m_z, n).

    The underlying mode index is m = n - m_z, so n >= m_z is required.
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if n - m_z < 0:
        raise IndexError(f"no state with m_z={m_z} at level n={n} (needs n >= m_z)")
    return spinor_state(p, n - m_z, n, pt)
