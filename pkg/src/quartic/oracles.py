"""Brute-force references that share no code path with the approximations.

* d=0: direct adaptive quadrature of <exp(-h x^4)>_x and <x^2 exp(-h x^4)>_x.
* d=1: <Theta> as a direct 2-D quadrature of its momentum integral.
* d=1: ground state of H = p^2/2 + q^2/2 + h q^4 by diagonalization in a
  harmonic-oscillator basis.  The basis frequency ``omega`` is a free scale;
  matrix elements come from ladder-operator algebra.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import linalg

from .errors import InvalidArgument
from .numerics import integrate_semi_infinite

_NORM = 1.0 / math.sqrt(2.0 * math.pi)


def _check_h(h):
    if not h >= 0:
        raise InvalidArgument(f"coupling h must be >= 0, got {h}")


def _gaussian_moment_quartic(h, power, tol):
    # 2 * int_0^inf x^power exp(-x^2/2 - h x^4) dx / sqrt(2 pi)
    def f(x):
        return x**power * math.exp(-0.5 * x * x - h * x**4)

    scale = min(1.0, h ** -0.25) if h > 0 else 1.0
    return 2.0 * _NORM * integrate_semi_infinite(f, tol=tol, scale=scale).value


def exact_energy_zero(h: float, tol: float = 1e-12) -> float:
    """E = -ln <exp(-h x^4)>_x."""
    _check_h(h)
    if h == 0:
        return 0.0
    return -math.log(_gaussian_moment_quartic(h, 0, tol))


def exact_green_zero(h: float, tol: float = 1e-12) -> float:
    """G = <x^2 exp(-h x^4)>_x / <exp(-h x^4)>_x."""
    _check_h(h)
    if h == 0:
        return 1.0
    return _gaussian_moment_quartic(h, 2, tol) / _gaussian_moment_quartic(h, 0, tol)


def weak_series_zero(h: float) -> float:
    """Two-term weak-coupling series of the d=0 energy, 3h - 48h^2.

    From <x^4> = 3 and <x^8> = 105: ln Z = -3h + (105 - 9) h^2 / 2 + O(h^3).
    """
    if not 0 <= h <= 0.01:
        raise InvalidArgument(f"weak series only valid for 0 <= h <= 0.01, got {h}")
    return 3.0 * h - 48.0 * h * h


@dataclass(frozen=True)
class HamiltonianSpec:
    h: float
    basis_size: int = 400
    omega: float | None = None  # None: scale with the quartic term

    def __post_init__(self):
        _check_h(self.h)
        if self.basis_size < 4:
            raise InvalidArgument(f"basis_size must be >= 4, got {self.basis_size}")

    @property
    def frequency(self) -> float:
        if self.omega is not None:
            return self.omega
        return max(1.0, (2.0 * self.h) ** (1.0 / 3.0))


@dataclass(frozen=True)
class SpectrumResult:
    ground_energy_shifted: float  # E_ground - 1/2
    convergence_gap: float  # |E(N) - E(2N)|
    odd_energy_shifted: float  # lowest odd-parity level - 1/2
    basis_size: int
    omega: float

    @property
    def ground_energy(self) -> float:
        return self.ground_energy_shifted + 0.5


def hamiltonian_matrix(h: float, size: int, omega: float = 1.0) -> np.ndarray:
    """Matrix of p^2/2 + q^2/2 + h q^4 on the first ``size`` states of an
    oscillator basis of frequency ``omega``.

    With q = (b + b^+)/sqrt(2 omega) and p = i sqrt(omega/2)(b^+ - b):
      (b + b^+)^2 has <n|.|n> = 2n + 1 and <n+2|.|n> = sqrt((n+1)(n+2)),
      (b^+ - b)^2 has <n|.|n> = -(2n + 1) and <n+2|.|n> = sqrt((n+1)(n+2)).
    q^4 is the square of q^2 on a basis two states larger, then truncated,
    which is exact for the retained block.
    """
    m = size + 2
    n = np.arange(m, dtype=float)
    off = np.sqrt((n[:-2] + 1.0) * (n[:-2] + 2.0))
    x2 = np.diag(2.0 * n + 1.0) + np.diag(off, 2) + np.diag(off, -2)
    p2 = np.diag(-(2.0 * n + 1.0)) + np.diag(off, 2) + np.diag(off, -2)
    q2 = x2 / (2.0 * omega)
    mom2 = -(omega / 2.0) * p2
    q4 = q2 @ q2
    H = 0.5 * mom2 + 0.5 * q2 + h * q4
    return H[:size, :size]


def _lowest(H, parity):
    block = H[parity::2, parity::2]
    return float(linalg.eigh(block, eigvals_only=True, subset_by_index=[0, 0])[0])


def diagonalize_aho(spec: HamiltonianSpec) -> SpectrumResult:
    """Lowest even- and odd-parity levels, plus the change under N -> 2N."""
    omega = spec.frequency
    N = spec.basis_size
    H = hamiltonian_matrix(spec.h, N, omega)
    even = _lowest(H, 0)
    odd = _lowest(H, 1)
    even2 = _lowest(hamiltonian_matrix(spec.h, 2 * N, omega), 0)
    return SpectrumResult(
        ground_energy_shifted=even - 0.5,
        convergence_gap=abs(even - even2),
        odd_energy_shifted=odd - 0.5,
        basis_size=N,
        omega=omega,
    )


def exact_energy_one(h: float, basis_size: int = 400) -> float:
    """E_num(h): oracle ground energy with the zero-point 1/2 subtracted."""
    return diagonalize_aho(HamiltonianSpec(h, basis_size)).ground_energy_shifted


def theta_mean_integral(a: float, tol: float = 1e-11) -> float:
    """<Theta> = 4 int dp/2pi (1 - 2/(p^2 + nu2)) int dk/2pi 1/((k^2 + m2)((k+p)^2 + m2))
    with m2 = 1 + 1/a and nu2 = 6 + 4/a, by nested adaptive quadrature.

    Both integrands are even (the inner one about k = -p/2), so each runs
    over a half line.
    """
    if not a > 0:
        raise InvalidArgument(f"a must be > 0, got {a}")
    m2 = 1.0 + 1.0 / a
    nu2 = 6.0 + 4.0 / a
    m = math.sqrt(m2)

    def bubble(p):
        half = 0.5 * p

        def f(u):
            return 1.0 / (((u - half) ** 2 + m2) * ((u + half) ** 2 + m2))

        return integrate_semi_infinite(f, tol=tol, scale=max(m, half)).value / math.pi

    def outer(p):
        return (1.0 - 2.0 / (p * p + nu2)) * bubble(p)

    return 4.0 * integrate_semi_infinite(outer, tol=tol * 10, scale=2.0 * m).value / math.pi
