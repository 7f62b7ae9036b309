"""Acceptance criteria, one test per criterion part.

Each test prints a single PASS/FAIL line (visible with ``-s``); the
conftest summary prints one line per criterion at the end of every run.
Tolerances are pinned below and must not be changed to make a check pass.
"""

import math

import numpy as np
import pytest

from quartic import cli, onedim, oracles, reference, tables, zerodim
from quartic.errors import DomainError
from quartic.numerics import SeededStream, gauss_hermite
from quartic.twodim import (
    C,
    RMode,
    asymptotic_energy,
    corr_integral_weak,
    energy0_two,
    f_integral,
    k0_fourth_moment,
    saddle_B,
    solve_B,
    w_squared_montecarlo,
    w_squared_quadrature,
)

# criterion 1
TOL_E_ZERO = 2e-4
TOL_G_ZERO = 1e-3
TOL_ORACLE_ZERO = 2e-4
# criterion 2
TOL_E0_ONE = 2e-4
TOL_ENUM_ONE = 1e-3
TOL_EOSC_ONE = 1e-2
BASIS_SIZE = 400
# criterion 3
TOL_WEAK_ONE = 1e-3
# criterion 4
TOL_STRONG_E0_ONE = 1e-3
TOL_UPPER_ONE = 1e-4
TOL_E0_PLUS_UPPER_ONE = 2e-4
TOL_STRONG_EXACT_ONE = 1e-3
# criterion 5
TOL_LOWER_ONE = 1e-4
# criterion 6
TOL_K0 = 1e-5
TOL_CORR = 1e-4
TOL_F = 1e-6
# criterion 7
TOL_W2 = 0.01
MC_SIGMAS = 3.0
MC_PATHS = 1_000_000
MC_STEPS = 64
# criterion 8
REL_TOL_WEAK_TWO = 0.02
# criterion 9
TOL_B_OVER_LOG_H = 0.01
REL_TOL_E0_TWO = 0.02
REL_TOL_ASYM_PRINTED = 1e-3
REL_TOL_ASYM_VS_NUM = 0.015
# criterion 10
TOL_SADDLE_B = 0.02
SADDLE_HS = (1e8, 1e14, 1e20)
# criterion 11
TOL_GH_MOMENTS = 1e-12
TOL_RESIDUAL_SHIFT = 1e-10
TOL_RESIDUAL_TWO = 1e-9

SEED = 20240101


def line(criterion, name, ok, detail):
    print(f"criterion {criterion} {name}: {'PASS' if ok else 'FAIL'} {detail}")
    return ok


@pytest.fixture(scope="module")
def table1():
    return {h: tables.table1_row(h) for h in reference.TABLE1}


@pytest.fixture(scope="module")
def table2():
    return {h: tables.table2_row(h, BASIS_SIZE) for h in reference.TABLE2}


@pytest.fixture(scope="module")
def strong_two():
    h = 1e20
    p = solve_B(h, RMode.UNIT)
    return h, p, energy0_two(h, RMode.UNIT, point=p)


@pytest.fixture(scope="module")
def w2():
    return w_squared_quadrature(1e-9)


def _worst(rows, printed, columns):
    return max(abs(rows[h][1 + j] - printed[h][j]) for h in printed for j in columns)


def test_criterion_01_energies(table1):
    worst = _worst(table1, reference.TABLE1, (0, 1))
    assert line(1, "E0,E1", worst <= TOL_E_ZERO, f"max dev {worst:.2e}"), worst


def test_criterion_01_greens(table1):
    worst = _worst(table1, reference.TABLE1, (3, 4))
    assert line(1, "G0,G1", worst <= TOL_G_ZERO, f"max dev {worst:.2e}"), worst


def test_criterion_01_oracles(table1):
    worst = _worst(table1, reference.TABLE1, (2, 5))
    assert line(1, "E,G oracle", worst <= TOL_ORACLE_ZERO, f"max dev {worst:.2e}"), worst


def test_criterion_01_row_count(table1):
    assert line(1, "rows", len(table1) == 9, f"{len(table1)} rows")


def test_criterion_02_e0(table2):
    worst = _worst(table2, reference.TABLE2, (0,))
    assert line(2, "E0", worst <= TOL_E0_ONE, f"max dev {worst:.2e}"), worst


def test_criterion_02_enum(table2):
    worst = _worst(table2, reference.TABLE2, (2,))
    assert line(2, "Enum", worst <= TOL_ENUM_ONE, f"max dev {worst:.2e}"), worst


def test_criterion_02_eosc(table2):
    devs = {h: abs(table2[h][2] - reference.TABLE2[h][1]) for h in reference.TABLE2}
    worst = max(devs.values())
    bad = {h: d for h, d in devs.items() if d > TOL_EOSC_ONE}
    # a miss is reported as an erratum diagnostic naming the rows, never swallowed
    assert line(2, "Eosc", not bad, f"max dev {worst:.2e}"), f"Eosc erratum diagnostic: {bad}"


def test_criterion_03_weak_series():
    c1, c2 = onedim.weak_coefficients_one()
    ok = abs(c1 - 3 / 8) <= TOL_WEAK_ONE and abs(c2 + 11 / 32) <= TOL_WEAK_ONE
    assert line(3, "coefficients", ok, f"c1={c1:.6f} c2={c2:.6f}"), (c1, c2)


def test_criterion_04_e0():
    r = onedim.strong_ratio(onedim.energy0_one(1e9), 1e9)
    assert line(4, "E0", abs(r - reference.STRONG_E0_ONE) <= TOL_STRONG_E0_ONE, f"{r:.6f}"), r


def test_criterion_04_upper_bound():
    h = 1e9
    r = onedim.delta_e1_bounds(h).upper / (2 * h) ** (1 / 3)
    assert line(4, "upper", abs(r - reference.UPPER_BOUND_ONE) <= TOL_UPPER_ONE, f"{r:.6f}"), r


def test_criterion_04_e0_plus_upper():
    h = 1e9
    r = onedim.strong_ratio(onedim.energy0_one(h) + onedim.delta_e1_bounds(h).upper, h)
    ok = abs(r - reference.E0_PLUS_UPPER_ONE) <= TOL_E0_PLUS_UPPER_ONE
    assert line(4, "E0+upper", ok, f"{r:.6f}"), r


def test_criterion_04_exact():
    r = onedim.strong_ratio(oracles.exact_energy_one(1e6, BASIS_SIZE), 1e6)
    assert line(4, "Enum", abs(r - reference.STRONG_EXACT_ONE) <= TOL_STRONG_EXACT_ONE, f"{r:.6f}"), r


def test_criterion_05_lower_bound_discrepancy():
    h = 1e9
    r = onedim.delta_e1_bounds(h, "paper").lower / (2 * h) ** (1 / 3)
    ok = abs(r - reference.LOWER_BOUND_FROM_PRINTED_THETA2) <= TOL_LOWER_ONE
    # printed constant is reported alongside, not asserted
    line(5, "printed lower (flagged)", True, f"printed {reference.LOWER_BOUND_ONE} vs computed {r:.6f}")
    assert line(5, "lower from <Theta^2>", ok, f"{r:.6f}"), r


def test_criterion_06_k0_moment():
    v = k0_fourth_moment()
    assert line(6, "u K0^4", abs(v - reference.K0_FOURTH_MOMENT) <= TOL_K0, f"{v:.8f}"), v


def test_criterion_06_double_integral():
    v = corr_integral_weak()
    assert line(6, "double integral", abs(v - reference.CORR_INTEGRAL_TARGET) <= TOL_CORR, f"{v:.8f}"), v


def test_criterion_06_f_integral():
    v = f_integral()
    assert line(6, "F integral", abs(v - 0.822467) <= TOL_F, f"{v:.8f}"), v


def test_criterion_07_quadrature(w2):
    assert line(7, "w2 quadrature", abs(w2 - 2.5623) <= TOL_W2, f"{w2:.6f}"), w2


@pytest.mark.slow
def test_criterion_07_montecarlo(w2):
    est, se = w_squared_montecarlo(MC_PATHS, MC_STEPS, SeededStream(SEED))
    sig = abs(est - w2) / se
    assert line(7, "w2 Monte Carlo", sig <= MC_SIGMAS, f"{est:.5f} +- {se:.5f} ({sig:.2f} sigma)"), sig


def test_criterion_08_weak_two():
    h = 1e-3
    r = energy0_two(h, RMode.COSH) / h**2
    ok = abs(r / -2.1036 - 1) <= REL_TOL_WEAK_TWO
    assert line(8, "E0/h^2", ok, f"{r:.5f}"), r


@pytest.mark.slow
def test_criterion_09_b(strong_two):
    h, p, _ = strong_two
    r = p.B / math.log(h)
    assert line(9, "B/ln h", abs(r - reference.B_OVER_LOG_H_1E20) <= TOL_B_OVER_LOG_H, f"{r:.6f}"), r


@pytest.mark.slow
def test_criterion_09_energy(strong_two):
    _, _, e = strong_two
    ok = abs(e / reference.E0_TWO_1E20 - 1) <= REL_TOL_E0_TWO
    assert line(9, "E0", ok, f"{e:.5e}"), e


@pytest.mark.slow
def test_criterion_09_asymptotic(strong_two):
    h, _, e = strong_two
    a = asymptotic_energy(h)
    ok = abs(a / reference.ASYMPTOTIC_E0_TWO_1E20 - 1) <= REL_TOL_ASYM_PRINTED and abs(a / e - 1) <= REL_TOL_ASYM_VS_NUM
    assert line(9, "asymptotic", ok, f"{a:.5e} vs numerical {e:.5e}"), (a, e)


@pytest.mark.slow
def test_criterion_10_xi_monotone():
    xis = []
    for h in SADDLE_HS:
        try:
            xis.append(saddle_B(h).xi)
        except DomainError:
            xis.append(float("nan"))
    ok = all(x > 1 for x in xis) and all(a > b for a, b in zip(xis, xis[1:]))
    assert line(10, "xi -> 1 monotone", ok, f"xi={xis}"), xis


@pytest.mark.slow
def test_criterion_10_b_offset():
    h = 1e20
    d = saddle_B(h).B - (math.log(h) - C - 2.0)
    assert line(10, "B - (ln h - C - 2)", abs(d) < TOL_SADDLE_B, f"{d:.5f}"), d


def test_criterion_11_gh_moments():
    rule = gauss_hermite(80)
    worst = 0.0
    for k in range(21):
        exact = float(np.prod(np.arange(2 * k - 1, 0, -2, dtype=float))) if k else 1.0
        worst = max(worst, abs(rule.average(lambda s: s ** (2 * k)) - exact) / exact)
    assert line(11, "moment exactness", worst <= TOL_GH_MOMENTS, f"{worst:.2e}"), worst


def test_criterion_11_residuals():
    r0 = max(abs(zerodim.solve_shift_zero(h).residual) for h in reference.TABLE1)
    r1 = max(abs(onedim.solve_shift_one(h).residual) for h in (1e-3, 0.1, 1.0, 100.0, 1e6, 1e9))
    r2 = max(abs(solve_B(h, RMode.UNIT).residual) for h in (1e-3, 1.0, 1e3, 1e10, 1e20))
    ok = r0 <= TOL_RESIDUAL_SHIFT and r1 <= TOL_RESIDUAL_SHIFT and r2 <= TOL_RESIDUAL_TWO
    assert line(11, "shift residuals", ok, f"{r0:.1e} {r1:.1e} {r2:.1e}"), (r0, r1, r2)


def test_criterion_11_bound_ordering():
    hs = np.geomspace(1e-3, 1e9, 25)
    ok = all(b.lower <= b.upper <= 0.0 for b in map(onedim.delta_e1_bounds, hs))
    assert line(11, "bound ordering", ok, "")


def test_criterion_11_mc_determinism():
    a = w_squared_montecarlo(20_000, 64, SeededStream(SEED))
    b = w_squared_montecarlo(20_000, 64, SeededStream(SEED))
    assert line(11, "seeded MC", a == b, f"{a}")


def test_criterion_11_cli_byte_identical(tmp_path):
    outs = [tmp_path / "a.csv", tmp_path / "b.csv"]
    for out, threads in zip(outs, ("1", "4")):
        code = cli.main(["scan", "--dim", "2", "--h-min", "1e-3", "--h-max", "1e3", "--points", "9",
                         "--threads", threads, "--out", str(out)])
        assert code == 0
    ok = outs[0].read_bytes() == outs[1].read_bytes()
    assert line(11, "byte-identical CLI", ok, "")
