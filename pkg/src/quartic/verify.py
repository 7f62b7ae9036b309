"""Acceptance checks collected into a machine-readable report.

Every check becomes a :class:`Record`.  Tolerances are absolute unless
``relative`` is set.  Diagnostic records (``flagged``) document known
disagreements with printed values; they always pass so that they are
reported without masking the real checks.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field

import numpy as np

from . import onedim, oracles, reference, tables, zerodim
from .errors import DomainError
from .numerics import SeededStream, gauss_hermite
from .twodim import (
    C,
    RMode,
    asymptotic_energy,
    corr_integral_weak,
    energy0_two,
    energy0_two_appD_form,
    f_integral,
    k0_fourth_moment,
    saddle_B,
    solve_B,
    w_squared_montecarlo,
    w_squared_quadrature,
)

PAPER, DERIVED, TRIVIAL = "paper", "derived", "trivial"


@dataclass
class Record:
    id: str
    criterion: int
    description: str
    expected: object
    actual: object
    tolerance: float | None
    provenance: str
    relative: bool = False
    flagged: bool = False
    note: str = ""
    passed: bool = field(default=False)

    def evaluate(self, tol_override: float | None = None) -> "Record":
        if self.flagged:
            self.passed = True
            return self
        if self.tolerance is None:
            self.passed = bool(self.actual)
            return self
        tol = self.tolerance if tol_override is None else tol_override
        if not (isinstance(self.actual, float) and math.isfinite(self.actual)):
            self.passed = False
            return self
        diff = abs(self.actual - self.expected)
        if self.relative:
            diff /= abs(self.expected)
        self.passed = bool(diff <= tol)
        return self

    def to_dict(self) -> dict:
        d = asdict(self)
        d["pass"] = d.pop("passed")
        return d


@dataclass
class VerifyReport:
    records: list
    fast: bool

    @property
    def overall_pass(self) -> bool:
        return all(r.passed for r in self.records)

    @property
    def failures(self):
        return [r for r in self.records if not r.passed]

    def to_dict(self) -> dict:
        return {
            "overall_pass": self.overall_pass,
            "fast": self.fast,
            "records": [r.to_dict() for r in self.records],
        }


def _f(x) -> float:
    return float(x)


def _table1(records):
    for h, printed in reference.TABLE1.items():
        row = tables.table1_row(h)
        for j, (name, tol) in enumerate(zip(reference.TABLE1_COLUMNS, (2e-4, 2e-4, 2e-4, 1e-3, 1e-3, 2e-4))):
            records.append(
                Record(f"1.{name}@{h:g}", 1, f"d=0 {name} at h={h:g}", printed[j], _f(row[1 + j]), tol, PAPER)
            )


def _table2(records):
    for h, printed in reference.TABLE2.items():
        row = tables.table2_row(h)
        for j, (name, tol) in enumerate(zip(reference.TABLE2_COLUMNS, (2e-4, 1e-2, 1e-3))):
            records.append(
                Record(f"2.{name}@{h:g}", 2, f"d=1 {name} at h={h:g}", printed[j], _f(row[1 + j]), tol, PAPER)
            )


def _onedim_limits(records):
    c1, c2 = onedim.weak_coefficients_one()
    records.append(Record("3.c1", 3, "d=1 weak coefficient of g^2 in E0", 3 / 8, c1, 1e-3, PAPER))
    records.append(Record("3.c2", 3, "d=1 weak coefficient of g^4 in E0", -11 / 32, c2, 1e-3, PAPER))

    h = 1e9
    g23 = (2.0 * h) ** (1.0 / 3.0)
    e0 = onedim.energy0_one(h)
    upper = onedim.delta_e1_bounds(h, "paper")
    closed = onedim.delta_e1_bounds(h, "closed")
    records += [
        Record("4.E0", 4, "d=1 (E0 + 1/2)/g^(2/3) at h=1e9", reference.STRONG_E0_ONE,
               onedim.strong_ratio(e0, h), 1e-3, PAPER,
               note="measured on the unshifted energy"),
        Record("4.upper", 4, "d=1 upper-bound constant dE1+/g^(2/3) at h=1e9", reference.UPPER_BOUND_ONE,
               upper.upper / g23, 1e-4, PAPER),
        Record("4.E0+upper", 4, "d=1 (E0 + dE1+ + 1/2)/g^(2/3) at h=1e9", reference.E0_PLUS_UPPER_ONE,
               onedim.strong_ratio(e0 + upper.upper, h), 2e-4, PAPER),
        Record("4.Enum", 4, "d=1 oracle (Enum + 1/2)/g^(2/3) at h=1e6", reference.STRONG_EXACT_ONE,
               onedim.strong_ratio(oracles.exact_energy_one(1e6), 1e6), 1e-3, PAPER),
        Record("5.lower", 5, "d=1 lower-bound constant from <Theta^2>=1.62407", reference.LOWER_BOUND_FROM_PRINTED_THETA2,
               upper.lower / g23, 1e-4, DERIVED),
        Record("5.lower_printed", 5, "d=1 printed lower-bound constant (diagnostic)", reference.LOWER_BOUND_ONE,
               upper.lower / g23, None, PAPER, flagged=True,
               note="printed <Theta^2> does not reproduce the printed lower bound"),
        Record("5.theta2_closed", 5, "d=1 closed-form <Theta^2> variance at h=1e9 (diagnostic)", 0.0,
               closed.variance, None, DERIVED, flagged=True,
               note="negative variance" if closed.flagged else ""),
    ]
    eosc_ratio = onedim.strong_ratio(onedim.energy_osc(h), h)
    records.append(Record("2.Eosc_strong", 2, "d=1 (Eosc + 1/2)/g^(2/3) at h=1e9", reference.STRONG_OSC_ONE,
                          eosc_ratio, 1e-3, PAPER))


def _twodim_identities(records):
    records += [
        Record("6.K0", 6, "int_0^inf u K0^4 du", reference.K0_FOURTH_MOMENT, k0_fourth_moment(), 1e-5, PAPER),
        Record("6.corr", 6, "weak correction double integral", reference.CORR_INTEGRAL_TARGET,
               corr_integral_weak(), 1e-4, DERIVED),
        Record("6.F", 6, "int_0^inf dt/t e^-t F(t)", 0.822467, f_integral(), 1e-6, PAPER),
    ]


def _fluctuation(records, fast, seed):
    w2 = w_squared_quadrature(1e-9)
    records.append(Record("7.w2", 7, "w^2 by quadrature", 2.5623, w2, 1e-2, DERIVED))
    if not fast:
        est, se = w_squared_montecarlo(1_000_000, 64, SeededStream(seed))
        records.append(Record("7.w2_mc", 7, "w^2 Monte Carlo within 3 sigma of quadrature", w2, _f(est),
                              3.0 * se, DERIVED, note=f"standard error {se:.3e}"))


def _weak_two(records):
    h = 1e-3
    e = energy0_two(h, RMode.COSH)
    records.append(Record("8.weak", 8, "d=2 E0/h^2 at h=1e-3 (cosh mode)", -2.1036, e / h**2, 0.02, PAPER, relative=True))


def _strong_two(records):
    h = 1e20
    p = solve_B(h, RMode.UNIT)
    e = energy0_two(h, RMode.UNIT, point=p)
    asym = asymptotic_energy(h)
    records += [
        Record("9.B", 9, "d=2 B/ln h at h=1e20", reference.B_OVER_LOG_H_1E20, p.B / math.log(h), 1e-2, PAPER),
        Record("9.E0", 9, "d=2 E0 at h=1e20", reference.E0_TWO_1E20, e, 0.02, PAPER, relative=True),
        Record("9.asym", 9, "asymptotic energy at h=1e20", reference.ASYMPTOTIC_E0_TWO_1E20, asym, 1e-3, PAPER,
               relative=True),
        Record("9.asym_vs_num", 9, "asymptotic vs numerical E0 at h=1e20", e, asym, 0.015, PAPER, relative=True),
        Record("9.appD", 9, "rewritten-form E0 vs E0 at h=1e20", e, energy0_two_appD_form(h, p.B), 0.01, DERIVED,
               relative=True),
    ]


def _saddle(records):
    xis = []
    for h in (1e8, 1e14, 1e20):
        try:
            xis.append(saddle_B(h).xi)
        except DomainError:
            xis.append(float("nan"))
    ok = all(math.isfinite(x) and x > 1 for x in xis) and xis[0] > xis[1] > xis[2]
    records.append(Record("10.xi", 10, "saddle xi decreasing towards 1 over h=1e8,1e14,1e20", True, ok, None, PAPER,
                          note="xi = " + ", ".join("none" if not math.isfinite(x) else f"{x:.6f}" for x in xis)))
    s = saddle_B(1e20)
    records.append(Record("10.B", 10, "saddle B - (ln h - C - 2) at h=1e20", 0.0, s.B - (math.log(1e20) - C - 2.0),
                          0.02, PAPER))


def _properties(records, seed, fast):
    rule = gauss_hermite(80)
    worst = 0.0
    for k in range(0, 21):
        exact = float(np.prod(np.arange(2 * k - 1, 0, -2, dtype=float))) if k else 1.0
        worst = max(worst, abs(rule.average(lambda s: s ** (2 * k)) - exact) / exact)
    records.append(Record("11.gh_moments", 11, "Gauss-Hermite even moments up to s^40, relative error", 0.0, worst,
                          1e-12, TRIVIAL))
    res0 = max(abs(zerodim.solve_shift_zero(h).residual) for h in reference.TABLE1)
    res1 = max(abs(onedim.solve_shift_one(h).residual) for h in (1e-3, 0.1, 1.0, 100.0, 1e6, 1e9))
    hs2 = (1e-3, 1.0, 1e3, 1e10) if fast else (1e-3, 1.0, 1e3, 1e10, 1e20)
    res2 = max(abs(solve_B(h, RMode.UNIT).residual) for h in hs2)
    records += [
        Record("11.res0", 11, "d=0 shift residual", 0.0, res0, 1e-10, TRIVIAL),
        Record("11.res1", 11, "d=1 shift residual (relative)", 0.0, res1, 1e-10, TRIVIAL),
        Record("11.res2", 11, "d=2 shift residual (relative to |B|+1)", 0.0, res2, 1e-9, TRIVIAL),
    ]
    ordered = True
    for h in (0.01, 0.1, 1.0, 10.0, 100.0, 1e4, 1e9):
        b = onedim.delta_e1_bounds(h)
        ordered &= b.lower <= b.upper <= 0.0
    records.append(Record("11.bounds", 11, "d=1 bounds ordered lower <= upper <= 0", True, ordered, None, TRIVIAL))
    a = w_squared_montecarlo(20_000, 64, SeededStream(seed))
    b = w_squared_montecarlo(20_000, 64, SeededStream(seed))
    records.append(Record("11.mc_determinism", 11, "seeded Monte Carlo repeats bit-for-bit", True, a == b, None,
                          TRIVIAL))
    header, rows = tables.compute_scan(2, tables.coupling_grid(1e-2, 1e2, 5), threads=1)
    first = tables.render_csv(header, rows)
    header, rows = tables.compute_scan(2, tables.coupling_grid(1e-2, 1e2, 5), threads=4)
    records.append(Record("11.csv_determinism", 11, "repeated CSV rendering is byte-identical", True,
                          first == tables.render_csv(header, rows), None, TRIVIAL))


def run_verification(fast: bool = False, tol_override: float | None = None, seed: int = 20240101) -> VerifyReport:
    """Evaluate every acceptance check.  ``fast`` skips the w^2 Monte Carlo
    and the h=1e20 checks."""
    records: list[Record] = []
    _table1(records)
    _table2(records)
    _onedim_limits(records)
    _twodim_identities(records)
    _fluctuation(records, fast, seed)
    _weak_two(records)
    if not fast:
        _strong_two(records)
        _saddle(records)
    _properties(records, seed, fast)
    for r in records:
        r.evaluate(tol_override)
    return VerifyReport(records, fast)
