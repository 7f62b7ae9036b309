"""Quartic anharmonic oscillator H = (p^2 + q^2 + g^2 q^4)/2, with h = g^2/2.

Energies follow the table convention: the free zero-point energy 1/2 is
subtracted.  Strong-coupling coefficients are measured on the unshifted
energy E + 1/2, whose ratio to g^(2/3) has no O(g^(-2/3)) offset.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidArgument
from .estimates import EnergyEstimate, Order
from .numerics import RootBracket, find_root, gamma, minimize_2d

THETA_SECOND_STRONG = 5.0 / 3.0 - 2.0 * math.sqrt(6.0) / 115.0

RHO_BOUNDS = (0.01, 1.99)
XI_MIN = 0.01
XI_MAX = 50.0


@dataclass(frozen=True)
class OneDimPoint:
    h: float
    g2: float
    a: float
    mu: float
    nu: float

    @property
    def residual(self) -> float:
        """Relative residual of a sqrt(1+a) = g^2."""
        return (self.a * math.sqrt(1.0 + self.a) - self.g2) / max(1.0, self.g2)


@dataclass(frozen=True)
class ThetaMoments:
    theta_mean: float
    theta_second_closed: float
    theta_second_paper_strong: float = THETA_SECOND_STRONG


@dataclass(frozen=True)
class EnergyBounds:
    lower: float
    upper: float
    variance: float
    flagged: bool  # negative variance from the chosen <Theta^2>


def _check(h):
    if not h >= 0:
        raise InvalidArgument(f"coupling h must be >= 0, got {h}")


def solve_shift_one(h: float) -> OneDimPoint:
    _check(h)
    g2 = 2.0 * h
    if g2 == 0:
        a = 0.0
    else:
        # a^{3/2} <= g^2 and a <= g^2 bound the root from above
        hi = max(g2, g2 ** (2.0 / 3.0))
        a = find_root(
            lambda x: x * math.sqrt(1.0 + x) - g2, RootBracket(0.0, hi, tol=1e-15 * hi)
        )
    return OneDimPoint(h, g2, a, math.sqrt(1.0 + a), math.sqrt(4.0 + 6.0 * a))


def _energy0_from_a(a: float) -> float:
    mu = math.sqrt(1.0 + a)
    # -1/2 - a/(8 mu) - mu/2 + sqrt(1 + 3a/2), regrouped to avoid cancellation
    return (
        -a / (8.0 * mu)
        - 0.5 * a / (1.0 + mu)
        + 1.5 * a / (1.0 + math.sqrt(1.0 + 1.5 * a))
    )


def energy0_one(h: float) -> float:
    return _energy0_from_a(solve_shift_one(h).a)


def _osc_objective(g2):
    def f(xi, rho):
        if xi <= 0 or not RHO_BOUNDS[0] <= rho <= RHO_BOUNDS[1]:
            return math.inf
        norm = gamma(1.0 + rho)
        return (
            xi / (8.0 * rho) * gamma(2.0 - rho) / norm
            + gamma(1.0 + 3.0 * rho) / (6.0 * xi * norm)
            + g2 / (10.0 * xi * xi) * gamma(1.0 + 5.0 * rho) / norm
        )

    return f


def osc_minimum(h: float):
    """Minimizer of the oscillator-approximation functional at coupling h.

    The xi search range grows like g^(2/3) so strong-coupling minima stay
    inside it.
    """
    _check(h)
    g2 = 2.0 * h
    xi_max = XI_MAX * max(1.0, g2 ** (1.0 / 3.0))
    f = _osc_objective(g2)

    def bounded(xi, rho):
        if not XI_MIN <= xi <= xi_max:
            return math.inf
        return f(xi, rho)

    starts = [
        (xi, rho)
        for xi in np.geomspace(XI_MIN * 10, xi_max / 2, 8)
        for rho in np.linspace(0.1, 1.8, 8)
    ]
    return minimize_2d(bounded, starts)


def energy_osc(h: float) -> float:
    return -0.5 + osc_minimum(h).value


def theta_moments(a: float) -> ThetaMoments:
    if not a > 0:
        raise InvalidArgument(f"theta moments need a > 0, got {a}")
    s1 = math.sqrt(1.0 + a)
    s6 = math.sqrt(4.0 + 6.0 * a)
    q = a * (2.0 * s1 + s6) / (4.0 * s1 * (2.0 + 3.0 * a + s1 * s6))
    den = (2.0 + 3.0 * a) * (3.0 + 5.0 * a)
    f = a**1.5 * (s1 * (24.0 + 31.0 * a) - s6 * (12.0 + 11.0 * a)) / (16.0 * (1.0 + a) * den)
    r = a**1.5 * (9.0 * s1 * s6 - 4.0 - 6.0 * a) / (32.0 * (1.0 + a) ** 1.5 * den)
    return ThetaMoments(theta_mean=4.0 * q, theta_second_closed=16.0 * (f + 2.0 * r))


def delta_e1_bounds(h: float, theta_second: str = "paper") -> EnergyBounds:
    """Concavity/convexity bounds on the first non-Gaussian correction.

    ``theta_second`` picks <Theta^2>: ``"paper"`` uses the printed
    strong-coupling constant, ``"closed"`` the printed closed forms F, R.
    A negative variance is flagged rather than raised.
    """
    if not h > 0:
        raise InvalidArgument(f"bounds need h > 0, got {h}")
    p = solve_shift_one(h)
    m = theta_moments(p.a)
    t = m.theta_mean
    if theta_second == "paper":
        t2 = m.theta_second_paper_strong
    elif theta_second == "closed":
        t2 = m.theta_second_closed
    else:
        raise InvalidArgument(f"theta_second must be 'paper' or 'closed', got {theta_second!r}")
    pref = p.g2 / (4.0 * p.a)
    upper = pref * (math.log1p(t) - t)
    var = t2 - t * t
    lower = upper - 0.5 * pref * var
    return EnergyBounds(lower=lower, upper=upper, variance=var, flagged=var < 0)


def first_correction_one(h: float, theta_second: str = "paper") -> EnergyEstimate:
    """E1 window: E0 + [lower, upper] bound, reported at the upper side."""
    e0 = energy0_one(h)
    b = delta_e1_bounds(h, theta_second)
    return EnergyEstimate(e0 + b.upper, Order.FIRST_CORRECTION, lower=e0 + b.lower, upper=e0 + b.upper)


def strong_coefficient_one() -> float:
    """lim E0(g)/g^(2/3) = sqrt(3/2) - 5/8."""
    return math.sqrt(1.5) - 0.625


def strong_ratio(energy_shifted: float, h: float) -> float:
    """(E + 1/2)/g^(2/3) for a zero-point-subtracted energy E at h = g^2/2."""
    return (energy_shifted + 0.5) / (2.0 * h) ** (1.0 / 3.0)


def weak_coefficients_one(g2_max: float = 0.02, points: int = 12, degree: int = 4):
    """First two weak-coupling coefficients (c1, c2) of E0 = c1 g^2 + c2 g^4 + ...

    Extracted numerically by a least-squares polynomial fit of E0/g^2 in g^2
    on a Chebyshev-spaced grid of (0, g2_max].
    """
    k = np.arange(points)
    x = 0.5 * g2_max * (1.0 - np.cos(np.pi * (k + 0.5) / points))
    y = np.array([energy0_one(0.5 * g2) / g2 for g2 in x])
    coef = np.polynomial.polynomial.polyfit(x, y, degree)
    return float(coef[0]), float(coef[1])
