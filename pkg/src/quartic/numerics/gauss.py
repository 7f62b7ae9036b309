"""Gauss-Hermite rules for the normalized Gaussian measure e^{-s^2/2}/sqrt(2 pi)."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from numpy.polynomial.hermite_e import hermegauss

from ..errors import ConvergenceFailure, InvalidArgument

DEFAULT_ORDER = 80
MAX_ORDER = 2560
IMAG_TOL = 1e-12


@dataclass(frozen=True)
class GaussHermiteRule:
    order: int
    nodes: np.ndarray
    weights: np.ndarray

    def average(self, f):
        """<f(s)>_s; ``f`` receives the whole node array."""
        return np.sum(self.weights * f(self.nodes))


@lru_cache(maxsize=None)
def gauss_hermite(order: int) -> GaussHermiteRule:
    if order < 2:
        raise InvalidArgument(f"Gauss-Hermite order must be >= 2, got {order}")
    x, w = hermegauss(order)
    # exact mirror symmetry so odd imaginary parts cancel pairwise
    x = 0.5 * (x - x[::-1])
    w = 0.5 * (w + w[::-1])
    w = w / w.sum()
    x.setflags(write=False)
    w.setflags(write=False)
    return GaussHermiteRule(order, x, w)


def _real_part(value, order):
    if np.iscomplexobj(value):
        if abs(value.imag) > IMAG_TOL:
            raise ConvergenceFailure(
                f"imaginary residue {abs(value.imag):.2e} of a Gaussian average "
                f"exceeds {IMAG_TOL:g} at order {order}",
                best=value.real,
            )
        return float(value.real)
    return float(value)


def gaussian_average(f, order=DEFAULT_ORDER, tol=1e-10, max_order=MAX_ORDER):
    """Real part of <f(s)>_s, doubling the order until two orders agree to ``tol``.

    Complex integrands are summed over mirror-symmetric nodes and the
    imaginary residue is checked against ``IMAG_TOL``.
    """
    prev = _real_part(gauss_hermite(order).average(f), order)
    while order < max_order:
        order *= 2
        cur = _real_part(gauss_hermite(order).average(f), order)
        if abs(cur - prev) <= tol * max(1.0, abs(cur)):
            return cur
        prev = cur
    raise ConvergenceFailure(
        f"Gaussian average not converged at order {order}", best=prev, error=abs(cur - prev)
    )
