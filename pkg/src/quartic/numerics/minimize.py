from __future__ import annotations

import math
from typing import NamedTuple

import numpy as np
from scipy import optimize

from ..errors import MinimizationFailure


class MinimizeResult(NamedTuple):
    point: tuple
    value: float
    gradient_norm: float


def _fd_gradient(f, x, h=1e-6):
    g = np.empty(2)
    for i in range(2):
        step = h * max(1.0, abs(x[i]))
        e = np.zeros(2)
        e[i] = step
        g[i] = (f(x + e) - f(x - e)) / (2 * step)
    return g


def minimize_2d(f, starts, xatol=1e-10, fatol=1e-14, maxiter=20000) -> MinimizeResult:
    """Multistart Nelder-Mead; returns the least value found over all starts.

    ``f`` may return inf/nan outside its domain; such points are treated as
    +inf.  The gradient norm at the result comes from central differences and
    lets callers confirm a local minimum.
    """
    starts = list(starts)
    if not starts:
        raise MinimizationFailure("no start points")

    def safe(p):
        v = f(p[0], p[1])
        return v if math.isfinite(v) else math.inf

    best = None
    for s in starts:
        if not math.isfinite(safe(np.asarray(s, float))):
            continue
        res = optimize.minimize(
            lambda p: safe(p),
            np.asarray(s, float),
            method="Nelder-Mead",
            options=dict(xatol=xatol, fatol=fatol, maxiter=maxiter, maxfev=maxiter),
        )
        if math.isfinite(res.fun) and (best is None or res.fun < best.fun):
            best = res
    if best is None:
        raise MinimizationFailure("all starts diverged or left the domain")
    # polish from the best vertex; Nelder-Mead can stall on long valleys
    res = optimize.minimize(
        safe, best.x, method="Nelder-Mead",
        options=dict(xatol=xatol, fatol=fatol, maxiter=maxiter, maxfev=maxiter),
    )
    if res.fun < best.fun:
        best = res
    grad = _fd_gradient(safe, best.x)
    return MinimizeResult((float(best.x[0]), float(best.x[1])), float(best.fun), float(np.hypot(*grad)))
