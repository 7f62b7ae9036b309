"""Two-dimensional phi^4 vacuum energy."""

from .fluctuation import (
    FluctuationConstant,
    fluctuation_constant,
    raw_integrand,
    w_squared_default,
    w_squared_montecarlo,
    w_squared_quadrature,
    w_variance_quadrature,
)
from .saddle import SaddlePoint, asymptotic_B, asymptotic_energy, saddle_B, saddle_f
from .vacuum import (
    C,
    EnergyCurve,
    RMode,
    TwoDimPoint,
    energy0_two,
    energy0_two_appD_form,
    energy_curve,
    energy_integrand,
    f_integral,
    phi_integral,
    q_exponent,
    shift_rhs,
    solve_B,
)
from .weak import (
    corr_integral_weak,
    correction_weak_coefficient,
    exact_weak_coefficient,
    k0_fourth_moment,
    leading_weak_coefficient,
    shift_weak_coefficient,
)

__all__ = [
    "C",
    "EnergyCurve",
    "FluctuationConstant",
    "RMode",
    "SaddlePoint",
    "TwoDimPoint",
    "asymptotic_B",
    "asymptotic_energy",
    "corr_integral_weak",
    "correction_weak_coefficient",
    "energy0_two",
    "energy0_two_appD_form",
    "energy_curve",
    "energy_integrand",
    "exact_weak_coefficient",
    "f_integral",
    "fluctuation_constant",
    "k0_fourth_moment",
    "leading_weak_coefficient",
    "phi_integral",
    "q_exponent",
    "raw_integrand",
    "saddle_B",
    "saddle_f",
    "shift_rhs",
    "shift_weak_coefficient",
    "solve_B",
    "w_squared_default",
    "w_squared_montecarlo",
    "w_squared_quadrature",
    "w_variance_quadrature",
]
