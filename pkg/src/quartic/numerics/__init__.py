"""Shared numerical kernel: Gaussian-measure quadrature, semi-infinite
quadrature, root finding, multistart minimization, special functions and
seeded random streams."""

from .gauss import GaussHermiteRule, gauss_hermite, gaussian_average
from .minimize import MinimizeResult, minimize_2d
from .quadrature import QuadratureResult, integrate_interval, integrate_semi_infinite
from .rng import SeededStream
from .roots import RootBracket, damped_fixed_point, expand_bracket, find_root
from .special import (
    EULER_GAMMA,
    ZETA3,
    bessel_k0,
    entire_e1,
    exp_integral_e1,
    gamma,
    ln2_complex,
    ln2_complex_array,
)

__all__ = [
    "EULER_GAMMA",
    "ZETA3",
    "GaussHermiteRule",
    "MinimizeResult",
    "QuadratureResult",
    "RootBracket",
    "SeededStream",
    "bessel_k0",
    "damped_fixed_point",
    "entire_e1",
    "exp_integral_e1",
    "expand_bracket",
    "find_root",
    "gamma",
    "gauss_hermite",
    "gaussian_average",
    "integrate_interval",
    "integrate_semi_infinite",
    "ln2_complex",
    "ln2_complex_array",
    "minimize_2d",
]
