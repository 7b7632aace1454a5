"""Generalised ladder operators on the spinor basis, with phase dressing.

The operators act on coefficient maps over SpinorLabel and are represented
by exactly the matrix elements their defining actions state:

    A- : (m, n) -> (m, n-1),   e^{i delta} sqrt(n) / sqrt(2^{[n=1]})
    B- : (m, n) -> (m-1, n),   sqrt(m) omega_n,
                               omega_n = cos(eta) + i sin(eta) (1 - [n=0])
    K- : (m, n) -> (m-1, n-1), e^{i gamma} sqrt(n m) / sqrt(2^{[n=1]})
    K0 : diagonal (m + n + 1)/2

Raising partners are the conjugate transposes.  The sqrt(2^{[n=1]})
factors come from the missing upper component of the n = 0 spinors; they
are kept literally, which makes the ideal ladder algebra hold only on
n >= 2 (the n in {0, 1} rows deviate by design, see verify_matrix_algebra).
"""

import cmath
import math
from dataclasses import dataclass, field

import numpy as np

from .fock import TruncatedOperator, block_dim, block_index
from .spinors import SpinorLabel

__all__ = [
    "PhaseParams",
    "apply_A_minus",
    "apply_B_minus",
    "apply_K_minus",
    "build_spinor_operator",
    "verify_matrix_algebra",
]

_TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class PhaseParams:
    """Phase angles of the generalised annihilation operators.

    gamma is always delta + eta reduced mod 2pi.
    """

    delta: float = 0.0
    eta: float = 0.0
    gamma: float = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "gamma", (self.delta + self.eta) % _TWO_PI)

    def omega(self, n):
        """cos(eta) + i sin(eta)(1 - [n=0]); a unit phase except on n = 0."""
        if n == 0:
            return complex(math.cos(self.eta), 0.0)
        return cmath.exp(1j * self.eta)


def _half_power(flag):
    # 1/sqrt(2) when flag else 1
    return 0.7071067811865475244 if flag else 1.0


def apply_A_minus(ph: PhaseParams, coeffs):
    """Image of a coefficient map under A-: n -> n-1 with e^{i delta} sqrt(n)."""
    out = {}
    for lab, c in coeffs.items():
        if lab.n == 0:
            continue
        w = cmath.exp(1j * ph.delta) * math.sqrt(lab.n) * _half_power(lab.n == 1)
        tgt = SpinorLabel(lab.m, lab.n - 1)
        out[tgt] = out.get(tgt, 0.0 + 0.0j) + w * c
    return out


def apply_B_minus(ph: PhaseParams, coeffs):
    """Image under B-: m -> m-1 with sqrt(m) omega_n."""
    out = {}
    for lab, c in coeffs.items():
        if lab.m == 0:
            continue
        w = math.sqrt(lab.m) * ph.omega(lab.n)
        tgt = SpinorLabel(lab.m - 1, lab.n)
        out[tgt] = out.get(tgt, 0.0 + 0.0j) + w * c
    return out


def apply_K_minus(ph: PhaseParams, coeffs):
    """Image under K- = A-B-: (m, n) -> (m-1, n-1).

    In diagonal labels this is e^{i gamma} sqrt(n (n - m_z)) acting along a
    fixed m_z; states with n = 0, or n = m_z for m_z >= 1, are annihilated.
    """
    out = {}
    for lab, c in coeffs.items():
        if lab.n == 0 or lab.m == 0:
            continue
        w = (cmath.exp(1j * ph.gamma) * math.sqrt(lab.n * lab.m)
             * _half_power(lab.n == 1))
        tgt = SpinorLabel(lab.m - 1, lab.n - 1)
        out[tgt] = out.get(tgt, 0.0 + 0.0j) + w * c
    return out


_APPLIERS = {"A-": apply_A_minus, "B-": apply_B_minus, "K-": apply_K_minus}


def build_spinor_operator(which, cutoff, ph: PhaseParams = PhaseParams()):
    """Dense truncated matrix of A-, A+, B-, B+, K-, K+ or K0.

    Raising operators are conjugate transposes of their lowering partners;
    transitions leaving the block are dropped.
    """
    if cutoff < 1 or int(cutoff) != cutoff:
        raise ValueError(f"cutoff must be an integer >= 1, got {cutoff}")
    cutoff = int(cutoff)
    dim = block_dim(cutoff)
    mat = np.zeros((dim, dim), dtype=complex)
    if which == "K0":
        for m in range(cutoff + 1):
            for n in range(cutoff + 1):
                i = block_index(m, n, cutoff)
                mat[i, i] = 0.5 * (m + n + 1)
        return TruncatedOperator(cutoff=cutoff, entries=mat)
    lowering = which if which in _APPLIERS else which[0] + "-"
    if lowering not in _APPLIERS:
        raise ValueError(f"unknown spinor operator {which!r}")
    apply = _APPLIERS[lowering]
    for m in range(cutoff + 1):
        for n in range(cutoff + 1):
            col = block_index(m, n, cutoff)
            img = apply(ph, {SpinorLabel(m, n): 1.0 + 0.0j})
            for tgt, w in img.items():
                mat[block_index(tgt.m, tgt.n, cutoff), col] = w
    if which.endswith("+"):
        mat = mat.conj().T.copy()
    return TruncatedOperator(cutoff=cutoff, entries=mat)


def _sub_dev(mat, mask):
    sub = mat[np.ix_(mask, mask)]
    return float(np.max(np.abs(sub))) if sub.size else 0.0


def verify_matrix_algebra(cutoff, ph: PhaseParams = PhaseParams()):
    """Commutator audit of the dressed operators on the truncated block.

    Deviations of the two Heisenberg-Weyl copies, the cross commutators and
    the su(1,1) closure are reported on the interior sub-block
    {0 <= m <= cutoff-2, 2 <= n <= cutoff-2}.  Two boundaries are excluded
    on purpose: the truncation edge (raising would leave the block) and the
    n in {0, 1} rows, where the literal sqrt(2^{[n=1]}) / omega_0 factors
    of the normalised-spinor representation shift the commutators away from
    their ideal values.  The observed boundary deviations are reported
    separately for transparency.
    """
    if cutoff < 3 or int(cutoff) != cutoff:
        raise ValueError(f"cutoff must be an integer >= 3, got {cutoff}")
    cutoff = int(cutoff)
    ops = {w: build_spinor_operator(w, cutoff, ph).entries
           for w in ("A-", "A+", "B-", "B+", "K-", "K+", "K0")}
    dim = block_dim(cutoff)
    eye = np.eye(dim)

    interior = np.zeros(dim, dtype=bool)
    for m in range(0, cutoff - 1):
        for n in range(2, cutoff - 1):
            interior[block_index(m, n, cutoff)] = True
    boundary = np.zeros(dim, dtype=bool)
    for m in range(0, cutoff - 1):
        for n in (0, 1):
            boundary[block_index(m, n, cutoff)] = True

    def comm(a, b):
        return ops[a] @ ops[b] - ops[b] @ ops[a]

    checks = {
        "[A-, A+] - I": comm("A-", "A+") - eye,
        "[B-, B+] - I": comm("B-", "B+") - eye,
        "[A-, B-]": comm("A-", "B-"),
        "[A-, B+]": comm("A-", "B+"),
        "[A+, B+]": comm("A+", "B+"),
        "[K-, K+] - 2K0": comm("K-", "K+") - 2.0 * ops["K0"],
        "[K0, K-] + K-": comm("K0", "K-") + ops["K-"],
        "[K0, K+] - K+": comm("K0", "K+") - ops["K+"],
    }
    report = {
        "cutoff": cutoff,
        "delta": ph.delta,
        "eta": ph.eta,
        "interior": {k: _sub_dev(v, interior) for k, v in checks.items()},
        "boundary_rows": {k: _sub_dev(v, boundary) for k, v in checks.items()},
    }
    report["max_interior_deviation"] = max(report["interior"].values())
    return report
