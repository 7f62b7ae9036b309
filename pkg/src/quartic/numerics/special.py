"""Special functions used by the shift equations and the weak-coupling checks.

E1 and K0 are computed from their power series near the origin and from a
continued fraction (E1) or a trapezoid sum of the integral representation
``K0(u) = int_0^inf exp(-u cosh t) dt`` (K0) further out.  The trapezoid rule
converges geometrically here because the integrand is entire and decays
double-exponentially.
"""

from __future__ import annotations

import cmath
import math

import numpy as np

from ..errors import DomainError

EULER_GAMMA = 0.57721566490153286061
ZETA3 = 1.20205690315959428540

_EPS = 2.220446049250313e-16
_K0_STEP = 0.125


def gamma(x: float) -> float:
    if x <= 0 and float(x).is_integer():
        raise DomainError(f"gamma has a pole at x={x}")
    return math.gamma(x)


def exp_integral_e1(t: float) -> float:
    """Exponential integral E1(t) = int_t^inf e^{-s}/s ds for t > 0."""
    if not t > 0:
        raise DomainError(f"E1 requires t > 0, got {t}")
    if t <= 1.0:
        return -EULER_GAMMA - math.log(t) + _e1_series_tail(t)
    # modified Lentz on the even continued fraction
    tiny = 1e-300
    b = t + 1.0
    c = 1.0 / tiny
    d = 1.0 / b
    h = d
    for i in range(1, 500):
        an = -float(i * i)
        b += 2.0
        d = 1.0 / (an * d + b)
        c = b + an / c
        delta = c * d
        h *= delta
        if abs(delta - 1.0) < _EPS:
            return h * math.exp(-t)
    raise DomainError(f"E1 continued fraction did not converge at t={t}")


def _e1_series_tail(t: float) -> float:
    # sum_{n>=1} (-1)^{n+1} t^n / (n n!)
    total = 0.0
    term = 1.0
    for n in range(1, 200):
        term *= t / n
        contrib = term / n
        total += contrib if n % 2 else -contrib
        if contrib < _EPS * abs(total):
            break
    return total


def entire_e1(t: float) -> float:
    """F(t) = E1(t) + ln t + C, evaluated without cancellation for small t.

    F is entire with the alternating series sum (-1)^{n+1} t^n / (n n!).
    """
    if t < 0:
        raise DomainError(f"F(t) is only used for t >= 0, got {t}")
    if t == 0:
        return 0.0
    if t <= 2.0:
        return _e1_series_tail(t)
    return exp_integral_e1(t) + math.log(t) + EULER_GAMMA


def bessel_k0(u: float) -> float:
    if not u > 0:
        raise DomainError(f"K0 requires u > 0, got {u}")
    if u <= 2.0:
        return _k0_series(u)
    return _k0_trapezoid(u)


def _k0_series(u: float) -> float:
    y = 0.25 * u * u
    term = 1.0
    i0 = 1.0
    harm = 0.0
    tail = 0.0
    for k in range(1, 60):
        term *= y / (k * k)
        harm += 1.0 / k
        i0 += term
        tail += term * harm
        if term < _EPS * 1e-3:
            break
    return -(math.log(0.5 * u) + EULER_GAMMA) * i0 + tail


def _k0_trapezoid(u: float) -> float:
    # e^{-u} int_0^inf exp(-2u sinh^2(t/2)) dt; step shrinks with the peak width
    step = min(_K0_STEP, 0.5 / math.sqrt(u))
    total = 0.5
    k = 1
    while True:
        val = math.exp(-2.0 * u * math.sinh(0.5 * k * step) ** 2)
        total += val
        if val < 1e-18 * total:
            break
        k += 1
    return total * step * math.exp(-u)


def ln2_complex(z: complex) -> complex:
    """Twice-subtracted logarithm ln(1+z) - z + z^2/2 (principal branch)."""
    z = complex(z)
    if z.real <= -1.0 and z.imag == 0.0:
        raise DomainError(f"ln2 undefined on the branch cut, z={z}")
    if abs(z) < 0.5:
        # sum_{k>=3} (-1)^{k+1} z^k / k
        total = 0j
        power = z * z
        for k in range(3, 80):
            power *= z
            contrib = power / k
            total += contrib if k % 2 else -contrib
            if abs(contrib) < _EPS * abs(total):
                break
        return total
    return cmath.log(1.0 + z) - z + 0.5 * z * z


def ln2_complex_array(z):
    """Vectorised :func:`ln2_complex` for numpy arrays."""
    z = np.asarray(z, dtype=complex)
    out = np.log1p(z) - z + 0.5 * z * z
    small = np.abs(z) < 0.5
    if np.any(small):
        zs = z[small]
        total = np.zeros_like(zs)
        power = zs * zs
        for k in range(3, 80):
            power = power * zs
            total += power / k if k % 2 else -power / k
        out[small] = total
    return out
