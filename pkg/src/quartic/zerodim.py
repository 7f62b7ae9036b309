"""Zero-dimensional model: Z = <exp(-h x^4)>_x with h = g^2/2.

After shifting the auxiliary variable by the root ``a`` of a(1+a) = 4h, the
remainder is an average over s of functions of ``1 + i s lam`` with
lam = sqrt(2a/(1+2a)).  All averages go through
:func:`quartic.numerics.gaussian_average`; complex integrands are summed on
mirror-symmetric nodes and only the real part survives.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InvalidArgument
from .numerics import gaussian_average, ln2_complex_array


@dataclass(frozen=True)
class ZeroDimPoint:
    h: float
    a: float
    lam: float

    @property
    def residual(self) -> float:
        return self.a * (1.0 + self.a) - 4.0 * self.h


@dataclass(frozen=True)
class ZeroDimResult:
    h: float
    E0: float
    E1: float
    G0: float
    G1: float


def _check(h):
    if not h >= 0:
        raise InvalidArgument(f"coupling h must be >= 0, got {h}")


def solve_shift_zero(h: float) -> ZeroDimPoint:
    _check(h)
    # (-1 + sqrt(1 + 16h)) / 2 without cancellation at small h
    a = 8.0 * h / (1.0 + math.sqrt(1.0 + 16.0 * h))
    lam = math.sqrt(2.0 * a / (1.0 + 2.0 * a))
    return ZeroDimPoint(h, a, lam)


def _w(lam):
    # W(s) = -1/2 ln2(1 + i s lam)
    return lambda s: -0.5 * ln2_complex_array(1j * s * lam)


def energy0_zero(h: float) -> float:
    p = solve_shift_zero(h)
    a = p.a
    return -a / (4.0 * (1.0 + a)) + 0.5 * math.log1p(2.0 * a)


def delta_energy1_zero(h: float, tol: float = 1e-10) -> float:
    """Delta E1 = -<W(s)> = (1/4)<ln(1 + lam^2 s^2)> - lam^2/4."""
    p = solve_shift_zero(h)
    if p.a == 0:
        return 0.0
    return -gaussian_average(_w(p.lam), tol=tol)


def energy1_zero(h: float, tol: float = 1e-10) -> float:
    return energy0_zero(h) + delta_energy1_zero(h, tol)


def green0_zero(h: float, tol: float = 1e-10) -> float:
    p = solve_shift_zero(h)
    if p.a == 0:
        return 1.0
    lam = p.lam
    return gaussian_average(lambda s: 1.0 / (1.0 + 1j * s * lam), tol=tol) / (1.0 + p.a)


def green1_zero(h: float, tol: float = 1e-10) -> float:
    p = solve_shift_zero(h)
    if p.a == 0:
        return 1.0
    lam = p.lam
    w = _w(lam)

    def inv(s):
        return 1.0 / (1.0 + 1j * s * lam)

    avg_inv = gaussian_average(inv, tol=tol)
    avg_w = gaussian_average(w, tol=tol)
    avg_w_inv = gaussian_average(lambda s: w(s) * inv(s), tol=tol)
    g0 = avg_inv / (1.0 + p.a)
    return g0 + (avg_w_inv - avg_inv * avg_w) / (1.0 + p.a)


def evaluate_zero(h: float, tol: float = 1e-10) -> ZeroDimResult:
    return ZeroDimResult(
        h=h,
        E0=energy0_zero(h),
        E1=energy1_zero(h, tol),
        G0=green0_zero(h, tol),
        G1=green1_zero(h, tol),
    )

