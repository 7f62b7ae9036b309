"""Laplace-method asymptotics of the d=2 shift equation at large h.

With R = 1 the shift integral is dominated by the maximum of

    f(t) = -t - ln t - h t (B + C + ln t).

Writing xi = h t_m for the location of that maximum, f'(t_m) = 0 gives

    B = ln h - ln xi - C - 1 - 1/xi - 1/h,

and the Gaussian approximation of the integral around t_m gives

    B = sqrt(pi / (2 (xi - 1))) e^{xi + 1}.

f''(t_m) = (1 - xi)/t_m^2, so a maximum needs xi > 1.  The right-hand side
is bounded below by about 21.6 (its minimum over xi > 1), hence a root only
exists once ln h is somewhat above 24.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from scipy.optimize import minimize_scalar

from ..errors import BracketError, DomainError, InvalidArgument
from ..numerics import EULER_GAMMA, RootBracket, find_root

C = EULER_GAMMA


@dataclass(frozen=True)
class SaddlePoint:
    h: float
    B: float
    xi: float
    t_m: float
    f_prime_scaled: float  # f'(t_m) / h
    f_second: float  # f''(t_m)

    @property
    def is_maximum(self) -> bool:
        return self.f_second < 0


def _lhs(h, xi):
    return math.log(h) - math.log(xi) - C - 1.0 - 1.0 / xi - 1.0 / h


def _rhs(xi):
    return math.sqrt(math.pi / (2.0 * (xi - 1.0))) * math.exp(xi + 1.0)


def saddle_f(h: float, B: float, t: float) -> float:
    return -t - math.log(t) - h * t * (B + C + math.log(t))


def saddle_f_prime(h: float, B: float, t: float) -> float:
    return -1.0 - 1.0 / t - h * (B + C + math.log(t) + 1.0)


def saddle_f_second(h: float, t: float) -> float:
    return 1.0 / (t * t) - h / t


def saddle_B(h: float) -> SaddlePoint:
    """Solve the two saddle conditions for (B, xi), taking the branch with
    xi -> 1 as h -> infinity."""
    if not h > 1.0:
        raise InvalidArgument(f"saddle_B needs h > 1, got {h}")

    def gap(xi):
        return _lhs(h, xi) - _rhs(xi)

    # gap -> -inf at xi -> 1+ and at xi -> inf; find its maximum
    opt = minimize_scalar(lambda x: -gap(x), bounds=(1.0 + 1e-12, 10.0), method="bounded",
                          options={"xatol": 1e-12})
    xi_star = float(opt.x)
    if gap(xi_star) <= 0.0:
        raise DomainError(
            f"no saddle with xi > 1 at h={h:g}: max of LHS - RHS is {gap(xi_star):.4g} at xi={xi_star:.4f}"
        )
    step = xi_star - 1.0
    while gap(1.0 + step) > 0.0:
        step *= 0.5
        if step < 1e-300:
            raise DomainError(f"saddle root not bracketed at h={h:g}")
    lo = 1.0 + step
    try:
        xi = find_root(gap, RootBracket(lo, xi_star, tol=1e-15))
    except BracketError as exc:
        raise DomainError(str(exc)) from exc
    B = _lhs(h, xi)
    t_m = xi / h
    return SaddlePoint(
        h=h,
        B=B,
        xi=xi,
        t_m=t_m,
        f_prime_scaled=saddle_f_prime(h, B, t_m) / h,
        f_second=saddle_f_second(h, t_m),
    )


def asymptotic_B(h: float) -> float:
    """Large-h limit ln h - C - 2."""
    if not h > 0:
        raise InvalidArgument(f"coupling h must be > 0, got {h}")
    return math.log(h) - C - 2.0


def asymptotic_energy(h: float) -> float:
    """Leading large-h vacuum energy -(3/2) h ln^2 h + 3 (C + 2) h ln h."""
    if not h > 1.0:
        raise InvalidArgument(f"asymptotic_energy needs h > 1, got {h}")
    L = math.log(h)
    return -1.5 * h * L * L + 3.0 * (C + 2.0) * h * L
