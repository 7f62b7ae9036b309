"""Adaptive quadrature on (0, inf) backed by QUADPACK."""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np
from scipy import integrate

from ..errors import ConvergenceFailure, InvalidArgument


@dataclass(frozen=True)
class QuadratureResult:
    value: float
    abs_error_estimate: float
    evaluations: int


def _quad(f, lo, hi, tol, limit, points=None, abs_tol=0.0):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", integrate.IntegrationWarning)
        value, err, info = integrate.quad(
            f, lo, hi, epsabs=abs_tol, epsrel=tol, limit=limit, points=points, full_output=1
        )[:3]
    return value, err, info["neval"]


def integrate_semi_infinite(
    f, tol=1e-10, transform="linear", scale=1.0, limit=400, lower=0.0, abs_tol=0.0, breaks=()
):
    """Integrate ``f`` over (lower, inf).

    ``transform="log"`` substitutes t = e^y, which resolves integrands that are
    sharply peaked at t << 1; ``scale`` is the expected peak position and is
    used as a breakpoint.  With the log transform ``lower`` must be 0 and
    ``breaks`` may add further breakpoints (in t), e.g. sign changes.
    ``abs_tol`` is an absolute error floor for integrals that may cancel to 0.
    """
    if not tol > 0:
        raise InvalidArgument(f"tol must be positive, got {tol}")
    if transform == "linear":
        pieces = [(lower, lower + scale), (lower + scale, math.inf)]
        g = f
    elif transform == "log":
        if lower != 0.0:
            raise InvalidArgument("log transform integrates from 0")
        ys = sorted({math.log(scale)} | {math.log(b) for b in breaks if 0.0 < b < math.inf})

        def g(y):
            # beyond |y| ~ 700 the weight t (or the integrand's decay) is below
            # double precision for any integrable f
            if not -700.0 < y < 700.0:
                return 0.0
            t = math.exp(y)
            return f(t) * t

        edges = [-math.inf] + ys + [math.inf]
        pieces = list(zip(edges[:-1], edges[1:]))
    else:
        raise InvalidArgument(f"unknown transform {transform!r}")

    value = err = mass = 0.0
    neval = 0
    for lo, hi in pieces:
        v, e, n = _quad(g, lo, hi, tol, limit, abs_tol=abs_tol / len(pieces))
        value += v
        err += e
        mass += abs(v)
        neval += n
    # pieces of opposite sign may cancel; accuracy is judged against their total size
    if not np.isfinite(value) or err > max(tol * (1.0 + mass), abs_tol):
        raise ConvergenceFailure(
            f"semi-infinite quadrature error {err:.3e} above tolerance", best=value, error=err
        )
    return QuadratureResult(value, err, neval)


def integrate_interval(f, lo, hi, tol=1e-10, points=None, limit=400):
    """Finite-interval adaptive quadrature with the same failure contract."""
    value, err, neval = _quad(f, lo, hi, tol, limit, points=points)
    if not np.isfinite(value) or err > tol * (1.0 + abs(value)):
        raise ConvergenceFailure(
            f"quadrature error {err:.3e} above tolerance on [{lo}, {hi}]", best=value, error=err
        )
    return QuadratureResult(value, err, neval)
