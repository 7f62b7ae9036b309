from __future__ import annotations

from dataclasses import dataclass

from scipy import optimize

from ..errors import BracketError, ConvergenceFailure


@dataclass(frozen=True)
class RootBracket:
    lo: float
    hi: float
    tol: float = 1e-12


def find_root(residual, bracket: RootBracket) -> float:
    """Bracketed root of ``residual`` (Brent's method).

    The bracket tolerance is applied to the abscissa; callers that need a
    residual bound pass a tight ``tol``.
    """
    flo = residual(bracket.lo)
    fhi = residual(bracket.hi)
    if flo == 0:
        return bracket.lo
    if fhi == 0:
        return bracket.hi
    if flo * fhi > 0:
        raise BracketError(
            f"residual does not change sign on [{bracket.lo}, {bracket.hi}]: {flo:.3e}, {fhi:.3e}"
        )
    return optimize.brentq(
        residual, bracket.lo, bracket.hi, xtol=bracket.tol, rtol=4 * 2.220446049250313e-16, maxiter=500
    )


def expand_bracket(residual, x0, step=1.0, grow=2.0, lo_limit=None, hi_limit=None, max_steps=60):
    """Grow a bracket around ``x0`` for a residual that increases with x."""
    f0 = residual(x0)
    if f0 == 0:
        return RootBracket(x0, x0)
    lo = hi = x0
    d = step
    for _ in range(max_steps):
        if f0 < 0:
            hi = x0 + d if hi_limit is None else min(x0 + d, hi_limit)
            if residual(hi) > 0:
                return RootBracket(lo, hi)
        else:
            lo = x0 - d if lo_limit is None else max(x0 - d, lo_limit)
            if residual(lo) < 0:
                return RootBracket(lo, hi)
        d *= grow
    raise BracketError(f"could not bracket a root starting from {x0}")


def damped_fixed_point(update, x0, omega=0.5, tol=1e-12, maxiter=200):
    """Iterate x <- (1 - omega) x + omega update(x).

    Raises ConvergenceFailure (with the last iterate) when the step does not
    fall below ``tol * (1 + |x|)`` within ``maxiter`` iterations or diverges.
    """
    x = x0
    last_step = float("inf")
    growing = 0
    for _ in range(maxiter):
        new = (1.0 - omega) * x + omega * update(x)
        if new != new or abs(new) > 1e300:
            raise ConvergenceFailure("fixed-point iteration diverged", best=x)
        step = abs(new - x)
        if step <= tol * (1.0 + abs(new)):
            return new
        # a step that keeps growing means the damped map is not contracting
        growing = growing + 1 if step > last_step else 0
        if growing >= 8:
            raise ConvergenceFailure("fixed-point iteration diverged", best=x)
        last_step = step
        x = new
    raise ConvergenceFailure("fixed-point iteration did not converge", best=x)
