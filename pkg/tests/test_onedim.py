import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quartic import onedim, oracles
from quartic.errors import InvalidArgument
from quartic.estimates import Order
from quartic.reference import TABLE2


@pytest.mark.parametrize("h,a", [(0.0, 0.0), (0.1, 0.183818)])
def test_shift_examples(h, a):
    assert abs(onedim.solve_shift_one(h).a - a) < 1e-6


@given(st.floats(min_value=1e-6, max_value=1e9))
@settings(max_examples=200, deadline=None)
def test_shift_residual_and_ranges(h):
    p = onedim.solve_shift_one(h)
    # relative to max(1, g^2): an absolute 1e-10 is below double resolution at g^2 ~ 1e9
    assert abs(p.residual) <= 1e-10
    assert p.mu >= 1.0 and p.nu >= 2.0


def test_shift_strong_scaling():
    g2 = 2e9
    # a -> g^(4/3) = (g^2)^(2/3)
    assert abs(onedim.solve_shift_one(1e9).a / g2 ** (2 / 3) - 1.0) < 1e-3


def test_negative_coupling():
    with pytest.raises(InvalidArgument):
        onedim.solve_shift_one(-1.0)


@pytest.mark.parametrize("h,expected", [(0.1, 0.06434), (100.0, 3.02802), (0.0, 0.0)])
def test_energy0_examples(h, expected):
    assert abs(onedim.energy0_one(h) - expected) < 2e-4


def test_energy0_matches_unregrouped_form():
    for h in (0.1, 1.0, 50.0):
        a = onedim.solve_shift_one(h).a
        raw = -0.5 - a / (8 * math.sqrt(1 + a)) - 0.5 * math.sqrt(1 + a) + math.sqrt(1 + 1.5 * a)
        assert abs(onedim.energy0_one(h) - raw) < 1e-13


@pytest.mark.parametrize("h,expected", [(0.1, 0.05938), (100.0, 2.63759)])
def test_energy_osc_examples(h, expected):
    assert abs(onedim.energy_osc(h) - expected) < 1e-4


def test_energy_osc_strong_limit():
    assert abs(onedim.strong_ratio(onedim.energy_osc(1e9), 1e9) - 0.531248) < 1e-4


@pytest.mark.parametrize("h", list(TABLE2))
def test_table2_ordering(h):
    assert oracles.exact_energy_one(h) <= onedim.energy_osc(h) <= onedim.energy0_one(h)


def test_weak_series_richardson():
    # (E0 - 3 g^2 / 8) / g^4 at g^2 = 1e-2, 1e-3, 1e-4, extrapolated linearly in g^2
    vals = {g2: (onedim.energy0_one(g2 / 2) - 0.375 * g2) / g2**2 for g2 in (1e-2, 1e-3, 1e-4)}
    r1 = (10 * vals[1e-3] - vals[1e-2]) / 9
    r2 = (10 * vals[1e-4] - vals[1e-3]) / 9
    assert abs(r1 - (-11 / 32)) < 1e-3
    assert abs(r2 - (-11 / 32)) < 1e-3


def test_weak_coefficients_fit():
    c1, c2 = onedim.weak_coefficients_one()
    assert abs(c1 - 3 / 8) < 1e-6
    assert abs(c2 + 11 / 32) < 1e-4


def test_strong_coefficient_closed_form():
    assert abs(onedim.strong_coefficient_one() - 0.599745) < 1e-6
    assert abs(onedim.strong_ratio(onedim.energy0_one(1e9), 1e9) - 0.599745) < 1e-3


@pytest.mark.parametrize("a", [1e-6, 1e-4])
def test_theta_mean_small_a(a):
    assert abs(onedim.theta_moments(a).theta_mean / a - 1.0) < 10 * a


def test_theta_mean_large_a():
    assert abs(onedim.theta_moments(1e12).theta_mean - math.sqrt(2 / 3)) < 1e-5


@given(st.floats(min_value=1e-8, max_value=1e12))
def test_theta_mean_positive(a):
    assert onedim.theta_moments(a).theta_mean > 0


def test_theta_second_modes():
    m = onedim.theta_moments(1e12)
    assert abs(m.theta_second_paper_strong - 1.62407) < 1e-5
    assert abs(m.theta_second_closed - 0.27037) < 1e-4


def test_theta_moments_domain():
    with pytest.raises(InvalidArgument):
        onedim.theta_moments(0.0)


@given(st.floats(min_value=1e-4, max_value=1e9))
@settings(max_examples=100, deadline=None)
def test_bounds_ordered(h):
    b = onedim.delta_e1_bounds(h)
    assert b.lower <= b.upper <= 0.0


def test_strong_bound_constants():
    h = 1e9
    g23 = (2 * h) ** (1 / 3)
    b = onedim.delta_e1_bounds(h)
    assert abs(b.upper / g23 + 0.054897) < 1e-4
    assert abs(b.lower / g23 + 0.17455) < 1e-4
    # arithmetic of the lower-bound constant from the printed moments
    t = math.sqrt(2 / 3)
    assert abs(0.25 * (math.log1p(t) - t - (onedim.THETA_SECOND_STRONG - t * t) / 2) + 0.17455) < 1e-4


def test_closed_form_variance_flagged():
    b = onedim.delta_e1_bounds(1e9, "closed")
    assert b.flagged and b.variance < 0


def test_bounds_vanish_weak_coupling_closed_mode():
    b = onedim.delta_e1_bounds(1e-8, "closed")
    assert abs(b.lower) < 1e-8 and abs(b.upper) < 1e-8


def test_bounds_reject_bad_mode():
    with pytest.raises(InvalidArgument):
        onedim.delta_e1_bounds(1.0, "other")


def test_first_correction_window():
    h = 1e9
    est = onedim.first_correction_one(h)
    assert est.order is Order.FIRST_CORRECTION
    assert est.lower <= est.value == est.upper
    assert abs(onedim.strong_ratio(est.upper, h) - 0.544848) < 1e-4
