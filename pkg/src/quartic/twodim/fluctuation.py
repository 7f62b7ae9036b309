"""Fluctuation constant w^2 of the cosh approximation R(ht) ~ cosh(h t w).

The normal-ordered bridge functional has variance

    <:W:^2> = (2 pi)^-2 int_[0,1]^4 dtau [1/(F12 F34 - G^2) - 1/(F12 F34)],

with F_ij = |tau_i - tau_j| - (tau_i - tau_j)^2 and
G = K13 - K14 - K23 + K24, K(t, s) = min(t, s) - t s (two-component
Brownian bridge, both momentum integrals done in closed form).

The functional enters R through exp(-(g^2 alpha / 2) :W:) and
g^2 alpha / 2 = pi h t, so the constant multiplying h t inside cosh is

    w^2 = pi^2 <:W:^2> = (1/4) int_[0,1]^4 [...].

Two independent evaluations are provided:

* quadrature: bridge increments are cyclically stationary, so tau_1 can be
  pinned to 0; the overlap of the two increment intervals is then integrated
  in closed form (an artanh), leaving a 2-D integral over the interval
  lengths with integrable log singularities on b = a and b = 1 - a;
* Monte Carlo on the raw 4-D integrand with importance sampling around the
  two singular planes {tau3, tau4} = {tau1, tau2}.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from ..errors import InvalidArgument
from ..numerics import SeededStream, integrate_interval

_TWO_PI_SQ = (2.0 * math.pi) ** 2


@dataclass(frozen=True)
class FluctuationConstant:
    w2_quadrature: float
    w2_montecarlo: float
    mc_standard_error: float
    quadrature_method: str = "reduced-2d-adaptive"
    montecarlo_method: str = "importance-sampled-4d"

    @property
    def discrepancy_sigma(self) -> float:
        return abs(self.w2_quadrature - self.w2_montecarlo) / self.mc_standard_error


def _atanh_minus_x(x: float) -> float:
    if abs(x) < 1e-3:
        x2 = x * x
        return x * x2 * (1.0 / 3.0 + x2 * (1.0 / 5.0 + x2 / 7.0))
    return math.atanh(x) - x


def _reduced_kernel(a: float, b: float) -> float:
    """Integrand over interval lengths (a, b) after pinning tau_1 = 0 and
    integrating the overlap c analytically; integrates to the raw 4-D value."""
    if a <= 0.0 or a >= 1.0 or b <= 0.0 or b >= 1.0:
        return 0.0
    lo, hi = (a, b) if a < b else (b, a)
    P = a * (1.0 - a) * b * (1.0 - b)
    r = math.sqrt(lo * (1.0 - hi) / (hi * (1.0 - lo)))
    u = a * b
    v = (1.0 - a) * (1.0 - b)
    s = math.sqrt(min(u, v) / max(u, v))
    val = (_atanh_minus_x(min(r, 1.0 - 1e-17)) + _atanh_minus_x(min(s, 1.0 - 1e-17))) / math.sqrt(P)
    # constant-overlap stretches (one interval inside the other, or disjoint)
    if b < a:
        val += 1.0 / (a * (1.0 - b))
    if a + b < 1.0:
        val += 1.0 / ((1.0 - a) * (1.0 - b))
    return 2.0 * val


def raw_integral_quadrature(tol: float = 1e-9) -> float:
    """int_[0,1]^4 [1/(F12 F34 - G^2) - 1/(F12 F34)] by the reduced 2-D route."""

    def inner(a):
        pts = sorted({0.0, a, 1.0 - a, 1.0})
        return sum(
            integrate_interval(lambda b: _reduced_kernel(a, b), p, q, tol=tol * 1e-2).value
            for p, q in zip(pts[:-1], pts[1:])
            if q > p
        )

    return sum(integrate_interval(inner, p, q, tol=tol).value for p, q in ((0.0, 0.5), (0.5, 1.0)))


def w_variance_quadrature(tol: float = 1e-9) -> float:
    """<:W:^2> over the bridge measure (coefficient of s^2/2 in R(s) with s = pi h t)."""
    return raw_integral_quadrature(tol) / _TWO_PI_SQ


def w_squared_quadrature(tol: float = 1e-9) -> float:
    """Fluctuation constant in the cosh(h t w) convention, pi^2 <:W:^2>."""
    if not tol > 0:
        raise InvalidArgument(f"tol must be positive, got {tol}")
    return 0.25 * raw_integral_quadrature(tol)


@lru_cache(maxsize=1)
def w_squared_default() -> float:
    return w_squared_quadrature(1e-9)


def raw_integrand(t1, t2, t3, t4):
    """Vectorised 4-D integrand G^2 / (P (P - G^2)), P = F12 F34; zero off the cube."""
    t1, t2, t3, t4 = (np.asarray(t, float) for t in (t1, t2, t3, t4))
    inside = (
        (t1 >= 0) & (t1 <= 1) & (t2 >= 0) & (t2 <= 1) & (t3 >= 0) & (t3 <= 1) & (t4 >= 0) & (t4 <= 1)
    )

    def K(t, s):
        return np.minimum(t, s) - t * s

    d12 = np.abs(t1 - t2)
    d34 = np.abs(t3 - t4)
    P = (d12 - d12 * d12) * (d34 - d34 * d34)
    G = K(t1, t3) - K(t1, t4) - K(t2, t3) + K(t2, t4)
    G2 = G * G
    den = P * (P - G2)
    out = np.zeros_like(P)
    ok = inside & (den > 0)
    out[ok] = G2[ok] / den[ok]
    return out


_MIX_UNIFORM = 0.5
_RADIUS = 0.25


def _ring_density(x, y):
    # 2-D density 1/(2 pi R rho) on the disc rho < R: cancels the 1/rho growth
    # of the integrand near the diagonal planes
    r = np.hypot(x, y)
    with np.errstate(divide="ignore"):
        return np.where(r < _RADIUS, 1.0 / (2.0 * math.pi * _RADIUS * r), 0.0)


def _gap_density(d):
    # density of tau_2 - tau_1 = d: half uniform on the cube, half |d|^(-1/2)/4
    # on [-1, 1], which tames the corner where all four times meet
    ad = np.abs(d)
    with np.errstate(divide="ignore"):
        return _MIX_UNIFORM + (1.0 - _MIX_UNIFORM) * np.where(ad <= 1.0, 0.25 / np.sqrt(ad), 0.0)


def _sample_batch(rng: np.random.Generator, n: int, strata: int):
    """Importance weights f/q for one batch, shaped (strata, n // strata)."""
    per = n // strata
    k = np.repeat(np.arange(strata), per)
    m = k.size
    # tau_1 stratified into `strata` equal bins
    t1 = (k + rng.random(m)) / strata
    gap = rng.random(m) ** 2 * np.where(rng.random(m) < 0.5, -1.0, 1.0)
    t2 = np.where(rng.random(m) < _MIX_UNIFORM, rng.random(m), t1 + gap)

    comp = rng.random(m)
    rho = _RADIUS * rng.random(m)
    theta = 2.0 * math.pi * rng.random(m)
    d1 = rho * np.cos(theta)
    d2 = rho * np.sin(theta)
    near_a = (comp >= _MIX_UNIFORM) & (comp < 0.5 * (1.0 + _MIX_UNIFORM))
    near_b = comp >= 0.5 * (1.0 + _MIX_UNIFORM)
    t3 = np.where(near_a, t1 + d1, np.where(near_b, t2 + d2, rng.random(m)))
    t4 = np.where(near_a, t2 + d2, np.where(near_b, t1 + d1, rng.random(m)))

    inside2 = (t2 >= 0.0) & (t2 <= 1.0)
    q12 = np.where(inside2, _gap_density(t2 - t1), 1.0)
    q34 = (
        _MIX_UNIFORM
        + 0.5 * (1.0 - _MIX_UNIFORM) * _ring_density(t3 - t1, t4 - t2)
        + 0.5 * (1.0 - _MIX_UNIFORM) * _ring_density(t4 - t1, t3 - t2)
    )
    weights = raw_integrand(t1, t2, t3, t4) / (q12 * q34)
    return weights.reshape(strata, per)


def w_squared_montecarlo(paths: int, steps: int, stream: SeededStream, batch: int = 200_000):
    """Monte Carlo estimate of w^2 and its standard error.

    ``paths`` is the number of sampled tau-quadruples and ``steps`` the number
    of strata for tau_1.  Samples are drawn in fixed-size batches, each from
    its own child stream, and reduced in order, so the result is bit-for-bit
    reproducible for a given stream.
    """
    if paths < 10_000:
        raise InvalidArgument(f"paths must be >= 1e4, got {paths}")
    if steps < 64:
        raise InvalidArgument(f"steps must be >= 64, got {steps}")
    per_batch = max(steps, (batch // steps) * steps)
    n_batches = max(1, -(-paths // per_batch))
    sums = np.zeros(steps)
    sq = np.zeros(steps)
    count = 0
    remaining = paths
    for i in range(n_batches):
        n = min(per_batch, remaining)
        n = max(steps, (n // steps) * steps)
        rng = stream.child(i).generator()
        w = _sample_batch(rng, n, steps)
        sums += w.sum(axis=1)
        sq += (w * w).sum(axis=1)
        count += w.shape[1]
        remaining -= n
    mean_k = sums / count
    var_k = (sq / count - mean_k**2) * count / (count - 1)
    estimate = mean_k.mean()
    se = math.sqrt(var_k.sum() / (steps * steps * count))
    return 0.25 * estimate, 0.25 * se


def fluctuation_constant(paths: int = 1_000_000, steps: int = 64, seed: int = 20240101, tol: float = 1e-9):
    mc, se = w_squared_montecarlo(paths, steps, SeededStream(seed))
    return FluctuationConstant(w_squared_quadrature(tol), mc, se)
