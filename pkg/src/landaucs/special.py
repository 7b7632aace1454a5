"""Special-function evaluation: associated Laguerre polynomials, the 0F1
limit hypergeometric, log-Pochhammer symbols and the modified Bessel
function of the second kind.

Everything here works on real arguments and integer orders/degrees only,
which is all the state constructions downstream require.  Factorial and
Gamma ratios are handled in log space throughout so that quantum numbers
of a few hundred stay representable.
"""

import math
from dataclasses import dataclass

__all__ = [
    "SeriesControl",
    "ConvergenceError",
    "DEFAULT_CONTROL",
    "laguerre_assoc",
    "log_factorial",
    "pochhammer_log",
    "hyp0f1",
    "hyp0f1_complex",
    "bessel_k",
    "bessel_k_scaled",
]

_EULER_GAMMA = 0.5772156649015328606


@dataclass(frozen=True)
class SeriesControl:
    """Truncation policy for the infinite sums used by the state builders.

    rel_tol is the relative size below which the series tail is dropped;
    max_terms caps the number of summed terms before giving up.
    """

    rel_tol: float = 1e-14
    max_terms: int = 10_000

    def __post_init__(self):
        if not (self.rel_tol > 0.0):
            raise ValueError(f"rel_tol must be positive, got {self.rel_tol}")
        if self.max_terms < 1:
            raise ValueError(f"max_terms must be >= 1, got {self.max_terms}")


DEFAULT_CONTROL = SeriesControl()


class ConvergenceError(RuntimeError):
    """A controlled series hit its term cap before meeting its tolerance.

    The partial sum accumulated so far is kept in ``partial``.
    """

    def __init__(self, message, partial):
        super().__init__(message)
        self.partial = partial


def laguerre_assoc(n, k, x):
    """Associated Laguerre polynomial L_n^k(x).

    Uses the three-term recurrence ascending in the degree n at fixed
    superscript k, which is stable for k >= 0 on the real line.
    """
    if n < 0 or int(n) != n:
        raise ValueError(f"degree n must be a nonnegative integer, got {n}")
    if k < 0 or int(k) != k:
        raise ValueError(f"order k must be a nonnegative integer, got {k}")
    if not math.isfinite(x):
        raise ValueError(f"argument must be finite, got {x}")
    n = int(n)
    if n == 0:
        return 1.0
    prev = 1.0
    cur = 1.0 + k - x
    for j in range(1, n):
        prev, cur = cur, ((2 * j + k + 1 - x) * cur - (j + k) * prev) / (j + 1)
    return cur


def log_factorial(n):
    """ln(n!) via lgamma."""
    if n < 0:
        raise ValueError(f"factorial argument must be nonnegative, got {n}")
    return math.lgamma(n + 1.0)


def pochhammer_log(a, k):
    """ln (a)_k = ln Gamma(a+k) - ln Gamma(a) for a > 0, integer k >= 0."""
    if not (a > 0.0):
        raise ValueError(f"pochhammer_log requires a > 0, got a={a}")
    if k < 0 or int(k) != k:
        raise ValueError(f"k must be a nonnegative integer, got {k}")
    if k == 0:
        return 0.0
    return math.lgamma(a + k) - math.lgamma(a)


def hyp0f1(b, x, ctl=DEFAULT_CONTROL):
    """Limit hypergeometric 0F1(; b; x) for b > 0 and x >= 0.

    All terms are positive, so the partial sums increase monotonically and
    the stopping rule (next term below rel_tol times the running sum) gives
    a certified relative tail bound.
    """
    if not (b > 0.0):
        raise ValueError(f"hyp0f1 requires b > 0, got b={b}")
    if x < 0.0:
        raise ValueError(f"hyp0f1 requires x >= 0, got x={x}")
    total = 1.0
    term = 1.0
    for n in range(ctl.max_terms):
        term *= x / ((b + n) * (n + 1))
        total += term
        if term <= ctl.rel_tol * total:
            return total
    raise ConvergenceError(
        f"hyp0f1(b={b}, x={x}) did not converge within {ctl.max_terms} terms",
        total,
    )


def hyp0f1_complex(b, z, ctl=DEFAULT_CONTROL):
    """0F1(; b; z) for complex z (same series, magnitude-based stopping).

    The stopping rule compares against max(|partial|, 1) so that arguments
    near a complex zero of 0F1 still terminate with a small absolute error.
    """
    if not (b > 0.0):
        raise ValueError(f"hyp0f1_complex requires b > 0, got b={b}")
    z = complex(z)
    total = 1.0 + 0.0j
    term = 1.0 + 0.0j
    for n in range(ctl.max_terms):
        term *= z / ((b + n) * (n + 1))
        total += term
        if abs(term) <= ctl.rel_tol * max(abs(total), 1.0):
            return total
    raise ConvergenceError(
        f"hyp0f1_complex(b={b}, z={z}) did not converge within {ctl.max_terms} terms",
        total,
    )


def _k01_series(x):
    """K_0(x) and K_1(x) by the ascending series (DLMF 10.31), x <= 2.

    The log term and the power series only partially cancel for x this
    small, so double precision keeps ~14 digits.
    """
    half = 0.5 * x
    q = half * half  # x^2/4
    lh = math.log(half)

    # I_0, I_1 and the psi-weighted companion sum for K_0.
    i0 = 1.0
    i1 = half
    k0_sum = -_EULER_GAMMA      # sum psi(k+1) q^k / (k!)^2, psi(1) = -gamma
    t0 = 1.0
    t1 = half
    psi = -_EULER_GAMMA
    for k in range(1, 60):
        psi += 1.0 / k          # psi(k+1)
        t0 *= q / (k * k)
        t1 *= q / (k * (k + 1))
        i0 += t0
        i1 += t1
        k0_sum += psi * t0
        if t0 < 1e-19 * i0:
            break
    k0 = -lh * i0 + k0_sum
    # K_1 = 1/x + ln(x/2) I_1(x) - (x/4) sum_k (psi(k+1)+psi(k+2)) q^k/(k!(k+1)!)
    k1 = 1.0 / x + lh * i1 - 0.25 * x * _k1_psi_sum(q)
    return k0, k1


def _k1_psi_sum(q):
    # sum_{k>=0} (psi(k+1)+psi(k+2)) q^k / (k! (k+1)!)
    psi1 = -_EULER_GAMMA
    psi2 = 1.0 - _EULER_GAMMA
    term = 1.0
    total = psi1 + psi2
    for k in range(1, 60):
        term *= q / (k * (k + 1))
        psi1 += 1.0 / k
        psi2 += 1.0 / (k + 1)
        contrib = (psi1 + psi2) * term
        total += contrib
        if abs(contrib) < 1e-19 * abs(total):
            break
    return total


def _k01_steed(x):
    """Scaled e^x K_0(x), e^x K_1(x) by Steed's continued fraction, x > 2.

    This is the CF2 evaluation of Temme/Thompson-Barnett (as used in the
    classic bessik routine) specialised to order nu = 0.
    """
    b = 2.0 * (1.0 + x)
    d = 1.0 / b
    h = delh = d
    q1 = 0.0
    q2 = 1.0
    a1 = 0.25
    q = c = a1
    a = -a1
    s = 1.0 + q * delh
    for i in range(2, 40001):
        a -= 2.0 * (i - 1)
        c = -a * c / i
        qnew = (q1 - b * q2) / a
        q1, q2 = q2, qnew
        q += c * qnew
        b += 2.0
        d = 1.0 / (b + a * d)
        delh = (b * d - 1.0) * delh
        h += delh
        dels = q * delh
        s += dels
        if abs(dels / s) < 1e-17:
            break
    h = a1 * h
    k0 = math.sqrt(math.pi / (2.0 * x)) / s
    k1 = k0 * (x + 0.5 - h) / x
    return k0, k1


def bessel_k_scaled(order, x):
    """Exponentially scaled e^x K_m(x) for integer m and x > 0."""
    if x <= 0.0:
        raise ValueError(f"bessel_k requires x > 0, got x={x}")
    if int(order) != order:
        raise ValueError(f"order must be an integer, got {order}")
    m = abs(int(order))  # K_{-m} = K_m
    if x <= 2.0:
        k0, k1 = _k01_series(x)
        ex = math.exp(x)
        k0 *= ex
        k1 *= ex
    else:
        k0, k1 = _k01_steed(x)
    if m == 0:
        return k0
    if m == 1:
        return k1
    # Upward recurrence K_{j+1} = K_{j-1} + (2j/x) K_j is stable: K grows
    # with the order.
    prev, cur = k0, k1
    for j in range(1, m):
        prev, cur = cur, prev + (2.0 * j / x) * cur
        if cur > 1e280:
            # keep going in log space would be overkill; the in-scope
            # orders (|m| <= ~30) never get here for x >= 1e-3
            raise OverflowError(
                f"K_{m}({x}) overflows double precision during recurrence"
            )
    return cur


def bessel_k(order, x):
    """Modified Bessel function of the second kind K_m(x), integer m, x > 0.

    Negative orders use K_{-m} = K_m.  Relative accuracy is ~1e-13 over
    1e-3 <= x <= 50 (ascending series below x = 2, Steed's continued
    fraction above, upward recurrence in the order).
    """
    return math.exp(-x) * bessel_k_scaled(order, x)
