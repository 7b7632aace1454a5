# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled grid-evaluation kernels.

Same contracts as kernels.reference (which holds the authoritative
documentation); the math runs point by point in C loops, with per-point
series windows instead of the reference's shared window, so the two
backends agree to roughly the series tolerance rather than bitwise.
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport ceil, cos, exp, lgamma, log, pow, sin, sqrt

cdef extern from "math.h" nogil:
    void sincos(double x, double *sin_out, double *cos_out)

cnp.import_array()

from scipy.special import gammaln

from ..special import ConvergenceError
from .reference import _MZ_MAX, _TAU_MAX, tail_terms

BACKEND_NAME = "cython"

ctypedef double complex dc

cdef double _LOG_RESCALE = 250.0 * 2.302585092994045684  # ln(1e250)
cdef double _UMAX_C = 1250.0
cdef dc I_UNIT = 1j


cdef inline dc cexp_(dc w) noexcept nogil:
    cdef double m = exp(w.real), s, c
    sincos(w.imag, &s, &c)
    return m * c + I_UNIT * (m * s)


cdef inline double cabs_(dc w) noexcept nogil:
    return sqrt(w.real * w.real + w.imag * w.imag)


def cs2d_fields(z, alpha_t, beta, double rel_tol=1e-14, long max_terms=10_000,
                double dxdy_scale=1.0):
    z_arr = np.ascontiguousarray(np.asarray(z, dtype=np.complex128))
    shape = z_arr.shape
    flat = z_arr.ravel()
    cdef cnp.complex128_t[::1] zv = flat
    cdef Py_ssize_t npts = zv.shape[0], i
    upper = np.empty(npts, dtype=np.complex128)
    lower = np.empty(npts, dtype=np.complex128)
    cdef cnp.complex128_t[::1] uv = upper
    cdef cnp.complex128_t[::1] lv = lower

    cdef dc at = complex(alpha_t)
    cdef dc bt = complex(beta)
    cdef double a2 = cabs_(at) * cabs_(at)
    cdef double b2 = cabs_(bt) * cabs_(bt)
    cdef double log_norm = log(np.pi) + a2 + log(2.0 - exp(-a2))
    cdef double lscale = log(dxdy_scale)
    cdef double width = max(12.0, sqrt(2.0 * log(1e8 / rel_tol)))

    cdef double qmax = 0.0, qa
    for i in range(npts):
        qa = cabs_(at * (zv[i] - bt))
        if qa > qmax:
            qmax = qa
    cdef long n_cap = tail_terms(qmax, rel_tol)
    if n_cap > max_terms:
        raise ConvergenceError(
            f"2D-CS series needs more than {max_terms} terms "
            f"(|alpha (z-beta)| up to {qmax:.3g})", None)
    inv_np = 1.0 / np.sqrt(np.arange(1, n_cap + 1, dtype=np.float64)
                           * np.arange(2, n_cap + 2, dtype=np.float64))
    cdef double[::1] inv = inv_np

    cdef dc w, q, log_pref, t, tot
    cdef double off
    cdef long n, n_hi
    with nogil:
        for i in range(npts):
            w = zv[i] - bt
            q = at * w
            log_pref = ((bt - 0.5 * zv[i]) * zv[i].conjugate()
                        - 0.5 * b2 - 0.5 * log_norm + lscale)
            lv[i] = I_UNIT * cexp_(log_pref + q)
            qa = cabs_(q)
            n_hi = <long> ceil(qa + width * sqrt(qa + 1.0) + 30.0)
            t = at
            tot = at
            off = 0.0
            for n in range(1, n_hi):
                t = t * q * inv[n - 1]
                tot = tot + t
                if (n & 15) == 0:
                    if t.real * t.real + t.imag * t.imag > 1e300:
                        t = t * 1e-250
                        tot = tot * 1e-250
                        off += _LOG_RESCALE
                    # past the term peak the ratio stays below ~1/1.2, so a
                    # small current term certifies a small geometric tail
                    elif n > 1.2 * qa + 8.0 and (
                            t.real * t.real + t.imag * t.imag
                            <= rel_tol * rel_tol
                            * (tot.real * tot.real + tot.imag * tot.imag)):
                        break
            uv[i] = cexp_(log_pref + off) * tot
    return upper.reshape(shape), lower.reshape(shape)


def su11_fields(xi, theta, tau_t, m_z, omega_b, double rel_tol=1e-14,
                long max_terms=10_000):
    xi_arr = np.ascontiguousarray(np.asarray(xi, dtype=np.float64))
    th_arr = np.ascontiguousarray(np.asarray(theta, dtype=np.float64))
    if xi_arr.shape != th_arr.shape:
        raise ValueError("xi and theta must have matching shapes")
    shape = xi_arr.shape
    xi_flat = xi_arr.ravel()
    th_flat = th_arr.ravel()
    cdef double[::1] xv = xi_flat
    cdef double[::1] tv = th_flat
    cdef Py_ssize_t npts = xv.shape[0], i
    upper = np.zeros(npts, dtype=np.complex128)
    lower = np.zeros(npts, dtype=np.complex128)
    cdef cnp.complex128_t[::1] uv = upper
    cdef cnp.complex128_t[::1] lv = lower

    tt = complex(tau_t)
    att = abs(tt)
    if att > _TAU_MAX:
        raise ValueError(
            f"|tau| = {att:.3g} outside the supported envelope (<= {_TAU_MAX})")
    if abs(m_z) > _MZ_MAX:
        raise ValueError(
            f"|m_z| = {abs(m_z)} outside the supported envelope (<= {_MZ_MAX})")
    cdef long j_hi = tail_terms(att, rel_tol)
    if j_hi > max_terms:
        raise ConvergenceError(
            f"su(1,1) series needs ~{j_hi} terms, above the cap {max_terms}",
            None)
    if att == 0.0:
        j_hi = 0

    cdef long mz = m_z, k = 0, j
    cdef double la = log(att) if att > 0.0 else 0.0
    cdef double ph = float(np.angle(-tt)) if att > 0.0 else 0.0
    js = np.arange(j_hi + 1, dtype=np.float64)
    jexp = js * la + 1j * js * ph
    cdef double log_base = 0.0, hk = 0.0, sub0 = 0.0, f01
    cdef long k_low, k_up
    if mz >= 1:
        f01 = _hyp0f1(mz + 1, att * att, rel_tol, max_terms)
        log_base = (0.5 * (log(omega_b) + lgamma(mz + 1.0) - log(4.0 * np.pi))
                    - 0.5 * (log(2.0) + log(f01)))
        c_low_np = np.exp(jexp - gammaln(js + mz + 1))
        c_up_np = np.exp(jexp - 0.5 * np.log(js + mz) - gammaln(js + mz))
        k_low = mz
        k_up = mz - 1
    else:
        k = -mz
        f01 = _hyp0f1(k + 1, att * att, rel_tol, max_terms)
        log_base = (0.5 * (log(omega_b) - log(4.0 * np.pi))
                    - 0.5 * log(2.0 * f01 - 1.0))
        hk = 0.5 * lgamma(k + 1.0)
        c_low_np = np.exp(jexp - gammaln(js + k + 1))
        c_up_np = np.exp(jexp - 0.5 * np.log(np.maximum(js, 1.0))
                         - gammaln(js + k + 1))
        c_up_np[0] = 0.0  # the upper sum starts at j = 1
        sub0 = exp(-lgamma(k + 1.0))
        k_low = k
        k_up = k + 1
    c_low_np = np.ascontiguousarray(c_low_np, dtype=np.complex128)
    c_up_np = np.ascontiguousarray(c_up_np, dtype=np.complex128)
    cdef cnp.complex128_t[::1] c_low = c_low_np
    cdef cnp.complex128_t[::1] c_up = c_up_np

    inv_np = 1.0 / np.arange(1.0, j_hi + 2.0)
    cdef double[::1] inv_deg = inv_np

    cdef double u, base, xiv, thv
    cdef dc s_low, s_up, ph_low, ph_up
    cdef double l1p, l1c, l1n, l2p, l2c, l2n
    cdef long deg
    cdef bint positive = mz >= 1
    with nogil:
        for i in range(npts):
            xiv = xv[i]
            thv = tv[i]
            u = xiv * xiv
            if u > _UMAX_C:
                continue
            s_low = 0.0
            l1p = 0.0
            l1c = 1.0
            s_up = 0.0
            l2p = 0.0
            l2c = 1.0
            if positive:
                for j in range(j_hi + 1):
                    s_low = s_low + c_low[j] * l1c
                    s_up = s_up + c_up[j] * l2c
                    l1n = ((2 * j + k_low + 1 - u) * l1c - (j + k_low) * l1p) * inv_deg[j]
                    l1p = l1c
                    l1c = l1n
                    l2n = ((2 * j + k_up + 1 - u) * l2c - (j + k_up) * l2p) * inv_deg[j]
                    l2p = l2c
                    l2c = l2n
                base = exp(log_base - 0.5 * u)
                ph_low = cos(mz * thv) + I_UNIT * sin(mz * thv)
                ph_up = cos((mz - 1) * thv) + I_UNIT * sin((mz - 1) * thv)
                lv[i] = I_UNIT * base * pow(xiv, mz) * ph_low * s_low
                uv[i] = base * pow(xiv, mz - 1) * ph_up * s_up
            else:
                for j in range(j_hi + 1):
                    s_low = s_low + c_low[j] * l1c
                    l1n = ((2 * j + k_low + 1 - u) * l1c - (j + k_low) * l1p) * inv_deg[j]
                    l1p = l1c
                    l1c = l1n
                    if j >= 1:
                        s_up = s_up + c_up[j] * l2c
                        deg = j - 1
                        l2n = ((2 * deg + k_up + 1 - u) * l2c - (deg + k_up) * l2p) * inv_deg[deg]
                        l2p = l2c
                        l2c = l2n
                base = exp(log_base - 0.5 * u)
                ph_low = cos(mz * thv) + I_UNIT * sin(mz * thv)
                ph_up = cos((mz - 1) * thv) + I_UNIT * sin((mz - 1) * thv)
                lv[i] = (I_UNIT * base * pow(xiv, k_low) * ph_low
                         * (exp(-hk) + exp(hk) * (s_low - sub0)))
                uv[i] = -base * exp(hk) * pow(xiv, k_up) * ph_up * s_up
    return upper.reshape(shape), lower.reshape(shape)


cdef double _hyp0f1(double b, double x, double rel_tol, long max_terms):
    cdef double total = 1.0, term = 1.0
    cdef long n
    for n in range(max_terms):
        term *= x / ((b + n) * (n + 1))
        total += term
        if term <= rel_tol * total:
            return total
    raise ConvergenceError(f"0F1(;{b};{x}) did not converge", total)
