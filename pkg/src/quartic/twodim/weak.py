"""Weak-coupling O(h^2) checks for the d=2 vacuum energy.

* The leading approximation with R = cosh(h t w) gives
  E0 / h^2 -> -(pi^2/6 + w^2)/2.
* The first correction gives E_corr / h^2 -> -I/2, with I the 2-D integral
  below.
* Second-order perturbation theory gives the full coefficient
  E / h^2 -> -3 int_0^inf u K0(u)^4 du.
"""

from __future__ import annotations

import math

from ..numerics import ZETA3, bessel_k0, integrate_interval, integrate_semi_infinite

PI2_OVER_6 = math.pi**2 / 6.0


def _corr_kernel(x: float, y: float) -> float:
    X = x * (1.0 - x)
    Y = y * (1.0 - y)
    if X <= 0.0 or Y <= 0.0:
        return 0.0
    d = X - Y
    if abs(d) < 1e-8:
        # derivative of ln at the diagonal
        ratio = 1.0 / X
    else:
        ratio = (math.log(X) - math.log(Y)) / d
    return (1.0 - x) * (1.0 - y) * ratio


def corr_integral_weak(tol: float = 1e-9) -> float:
    """I = int_[0,1]^2 (1-x)(1-y) [ln X - ln Y]/(X - Y), X = x(1-x), Y = y(1-y)."""

    def inner(x):
        pts = sorted({0.0, x, 1.0 - x, 1.0})
        return sum(
            integrate_interval(lambda y: _corr_kernel(x, y), p, q, tol=tol).value
            for p, q in zip(pts[:-1], pts[1:])
            if q > p
        )

    return sum(integrate_interval(inner, p, q, tol=tol).value for p, q in ((0.0, 0.5), (0.5, 1.0)))


def k0_fourth_moment(tol: float = 1e-11) -> float:
    """int_0^inf u K0(u)^4 du (equals (7/8) zeta(3))."""
    return integrate_semi_infinite(
        lambda u: u * bessel_k0(u) ** 4, tol=tol, transform="log", scale=1.0
    ).value


def exact_weak_coefficient(tol: float = 1e-11) -> float:
    """Coefficient c in E = -c h^2 m^2/(8 pi) from second-order perturbation theory."""
    return 3.0 * k0_fourth_moment(tol)


def leading_weak_coefficient(w2: float) -> float:
    """lim E0/h^2 for the cosh approximation with fluctuation constant w2."""
    return -0.5 * (PI2_OVER_6 + w2)


def shift_weak_coefficient(w2: float) -> float:
    """lim B/h^2 for the cosh approximation."""
    return 0.25 * (PI2_OVER_6 + w2)


def correction_weak_coefficient(tol: float = 1e-9) -> float:
    """lim E_corr/h^2 = -I/2."""
    return -0.5 * corr_integral_weak(tol)


ZETA3_TARGETS = {
    "w2": 3.5 * ZETA3 - PI2_OVER_6,
    "leading": -1.75 * ZETA3,
    "corr_integral": 1.75 * ZETA3,
    "exact": 21.0 / 8.0 * ZETA3,
}
