"""Scalar Landau-level eigenfunctions and the two boson ladder families.

The scalar basis psi_{m,n} carries two independent mode indices: n counts
the Landau level of the upper factorised Hamiltonian, m indexes the
infinite degeneracy.  A-/A+ move n, B-/B+ move m, and the angular momentum
L_z = N - M labels the diagonal m_z = n - m.

Operators are also exposed as dense matrices on the finite block
{(m, n): 0 <= m, n <= cutoff} with raising transitions that would leave
the block dropped; any algebraic identity is therefore only asserted on an
interior sub-block.
"""

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .model import ModelParams, PlanePoint, to_elliptic
from .special import laguerre_assoc, log_factorial

__all__ = [
    "ScalarIndex",
    "TruncatedOperator",
    "ANNIHILATED",
    "psi_scalar",
    "ladder_action",
    "build_truncated",
    "check_factorization",
    "block_index",
    "block_dim",
    "interior_mask",
]

#: sentinel for a ladder action that destroys the state
ANNIHILATED = None


@dataclass(frozen=True)
class ScalarIndex:
    m: int
    n: int

    def __post_init__(self):
        if self.m < 0 or self.n < 0:
            raise ValueError(f"mode indices must be nonnegative, got ({self.m}, {self.n})")

    @property
    def m_z(self):
        return self.n - self.m


@dataclass(frozen=True)
class TruncatedOperator:
    """Dense matrix over the two-mode block, (m, n) lexicographic order."""

    cutoff: int
    entries: np.ndarray

    @property
    def dim(self):
        return (self.cutoff + 1) ** 2


def block_index(m, n, cutoff):
    return m * (cutoff + 1) + n


def block_dim(cutoff):
    return (cutoff + 1) ** 2


def psi_scalar(p: ModelParams, idx: ScalarIndex, pt: PlanePoint) -> complex:
    """Normalised scalar eigenfunction evaluated at a plane point.

    In the stretched polar chart the value is

        (-1)^min (omega_b min!/(4 pi max!))^(1/2) xi^|mz| e^{-xi^2/2}
        e^{i mz theta} L_min^{|mz|}(xi^2),

    with min/max over (m, n).  The factorial ratio and the xi power are
    combined in log space so large indices stay finite.
    """
    ep = to_elliptic(p, pt)
    m, n = idx.m, idx.n
    lo, hi = min(m, n), max(m, n)
    k = hi - lo
    u = ep.xi * ep.xi
    lag = laguerre_assoc(lo, k, u)
    if lag == 0.0:
        return 0.0 + 0.0j
    if ep.xi == 0.0:
        if k > 0:
            return 0.0 + 0.0j
        log_radial = -0.5 * u
    else:
        log_radial = k * math.log(ep.xi) - 0.5 * u
    log_mag = (
        0.5 * (math.log(p.omega_b / (4.0 * math.pi)) + log_factorial(lo) - log_factorial(hi))
        + log_radial
        + math.log(abs(lag))
    )
    sign = -1.0 if (lo % 2) else 1.0
    if lag < 0.0:
        sign = -sign
    return sign * math.exp(log_mag) * cmath.exp(1j * (n - m) * ep.theta)


def ladder_action(which, idx: ScalarIndex):
    """Coefficient and target of one ladder operator on a basis state.

    Returns (coefficient, new ScalarIndex), or (0.0, ANNIHILATED) when the
    state is destroyed.
    """
    m, n = idx.m, idx.n
    if which == "A-":
        if n == 0:
            return 0.0, ANNIHILATED
        return math.sqrt(n), ScalarIndex(m, n - 1)
    if which == "A+":
        return math.sqrt(n + 1), ScalarIndex(m, n + 1)
    if which == "B-":
        if m == 0:
            return 0.0, ANNIHILATED
        return math.sqrt(m), ScalarIndex(m - 1, n)
    if which == "B+":
        return math.sqrt(m + 1), ScalarIndex(m + 1, n)
    raise ValueError(f"unknown ladder operator {which!r}")


def build_truncated(which, cutoff) -> TruncatedOperator:
    """Dense matrix of a ladder/number operator on the truncated block.

    which is one of A-, A+, B-, B+, N, M, Lz.  Raising transitions that
    exit the block are dropped, mirroring annihilation.
    """
    if cutoff < 1 or int(cutoff) != cutoff:
        raise ValueError(f"cutoff must be an integer >= 1, got {cutoff}")
    cutoff = int(cutoff)
    dim = block_dim(cutoff)
    mat = np.zeros((dim, dim), dtype=complex)
    for m in range(cutoff + 1):
        for n in range(cutoff + 1):
            col = block_index(m, n, cutoff)
            if which == "N":
                mat[col, col] = n
            elif which == "M":
                mat[col, col] = m
            elif which == "Lz":
                mat[col, col] = n - m
            else:
                coeff, new = ladder_action(which, ScalarIndex(m, n))
                if new is ANNIHILATED:
                    continue
                if new.m > cutoff or new.n > cutoff:
                    continue
                mat[block_index(new.m, new.n, cutoff), col] = coeff
    return TruncatedOperator(cutoff=cutoff, entries=mat)


def interior_mask(cutoff, margin=1, n_min=0, m_min=0):
    """Boolean mask over the block basis selecting indices away from edges."""
    mask = np.zeros(block_dim(cutoff), dtype=bool)
    for m in range(m_min, cutoff + 1 - margin):
        for n in range(n_min, cutoff + 1 - margin):
            mask[block_index(m, n, cutoff)] = True
    return mask


def _interior_dev(mat, mask):
    sub = mat[np.ix_(mask, mask)]
    return float(np.max(np.abs(sub))) if sub.size else 0.0


def check_factorization(p: ModelParams, cutoff):
    """Verify the factorised Hamiltonian identities on the truncated block.

    Checks, as matrices restricted to the interior sub-block:
      * N = A+A- equals B+B- + Lz,
      * A-A+ equals N + 1,
      * [Lz, A+-] = +-A+-  and  [Lz, B+-] = -+B+-.
    Returns a report dict of maximal elementwise deviations (all exact
    zeros in integer arithmetic).
    """
    if cutoff < 2 or int(cutoff) != cutoff:
        raise ValueError(f"cutoff must be an integer >= 2, got {cutoff}")
    cutoff = int(cutoff)
    ops = {w: build_truncated(w, cutoff).entries for w in
           ("A-", "A+", "B-", "B+", "N", "M", "Lz")}
    eye = np.eye(block_dim(cutoff))
    mask = interior_mask(cutoff, margin=1)

    h_plus = ops["A+"] @ ops["A-"]
    h_minus = ops["A-"] @ ops["A+"]
    lz = ops["Lz"]
    report = {
        "omega_b": p.omega_b,
        "cutoff": cutoff,
        "H+ = A+A- = B+B- + Lz": _interior_dev(h_plus - (ops["B+"] @ ops["B-"] + lz), mask),
        "H- = H+ + 1": _interior_dev(h_minus - (h_plus + eye), mask),
        "[Lz, A+] - A+": _interior_dev(lz @ ops["A+"] - ops["A+"] @ lz - ops["A+"], mask),
        "[Lz, A-] + A-": _interior_dev(lz @ ops["A-"] - ops["A-"] @ lz + ops["A-"], mask),
        "[Lz, B+] + B+": _interior_dev(lz @ ops["B+"] - ops["B+"] @ lz + ops["B+"], mask),
        "[Lz, B-] - B-": _interior_dev(lz @ ops["B-"] - ops["B-"] @ lz - ops["B-"], mask),
    }
    report["max_deviation"] = max(v for k, v in report.items()
                                  if k not in ("omega_b", "cutoff"))
    return report
