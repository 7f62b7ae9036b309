"""Command-line front end for the quartic anharmonicity approximations.

Subcommands recompute the reference tables, scan couplings, run the
verification report, estimate w^2 and compare large-h asymptotics.

Exit codes: 0 success, 1 verification failure, 2 usage or I/O error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from . import __version__, tables
from .errors import DomainError, QuarticError
from .numerics import SeededStream
from .twodim import (
    C,
    RMode,
    asymptotic_B,
    asymptotic_energy,
    energy0_two,
    energy0_two_appD_form,
    saddle_B,
    solve_B,
    w_squared_montecarlo,
    w_squared_quadrature,
    w_variance_quadrature,
)
from .verify import run_verification

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
DEFAULT_SEED = 20240101


def _add_common(p, tol_default=1e-10):
    p.add_argument("--out", help="output file (default: stdout)")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED, help=f"RNG seed (default {DEFAULT_SEED})")
    p.add_argument("--threads", type=int, default=None,
                   help="worker threads (default: $QUARTIC_THREADS or the CPU count)")
    p.add_argument("--tol", type=float, default=tol_default, help=f"numerical tolerance (default {tol_default:g})")
    p.add_argument("--r-mode", choices=[m.value for m in RMode], default="auto",
                   help="treatment of R(ht) in d=2 (default auto: cosh below h=1, unit above)")
    p.add_argument("--fast", action="store_true", help="skip the w^2 Monte Carlo and the h=1e20 checks")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="quartic", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", help="recompute a reference table as CSV")
    p.add_argument("table_id", type=int, choices=[1, 2])
    _add_common(p)

    p = sub.add_parser("scan", help="energies over a range of couplings as CSV")
    p.add_argument("--dim", type=int, choices=[0, 1, 2], required=True)
    p.add_argument("--h-min", type=float, required=True)
    p.add_argument("--h-max", type=float, required=True)
    p.add_argument("--points", type=int, default=25)
    p.add_argument("--linear", action="store_true", help="linear spacing (default: logarithmic)")
    _add_common(p)

    p = sub.add_parser("verify", help="run the acceptance checks and write a JSON report")
    _add_common(p)
    p.set_defaults(tol=None)
    p.description = "--tol overrides every record tolerance."

    p = sub.add_parser("wsq", help="fluctuation constant w^2 by quadrature and Monte Carlo")
    p.add_argument("--paths", type=int, default=1_000_000)
    p.add_argument("--steps", type=int, default=64)
    _add_common(p, tol_default=1e-9)

    p = sub.add_parser("asymptotics", help="saddle-point and large-h comparison at one coupling")
    p.add_argument("--h", type=float, default=1e20)
    _add_common(p)
    return parser


def _threads(args) -> int:
    if args.threads is not None:
        if args.threads < 1:
            raise ValueError("--threads must be >= 1")
        return args.threads
    return tables.default_threads()


def _emit(text: str, out) -> None:
    if out:
        tables.write_atomic(out, text)
    else:
        sys.stdout.write(text)


def _json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False, allow_nan=True) + "\n"


def cmd_table(args) -> int:
    header, rows = tables.compute_table(args.table_id, _threads(args), args.tol)
    _emit(tables.render_csv(header, rows), args.out)
    return EXIT_OK


def cmd_scan(args) -> int:
    hs = tables.coupling_grid(args.h_min, args.h_max, args.points, log=not args.linear)
    header, rows = tables.compute_scan(args.dim, hs, RMode(args.r_mode), _threads(args), args.tol)
    _emit(tables.render_csv(header, rows), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    report = run_verification(fast=args.fast, tol_override=args.tol, seed=args.seed)
    _emit(_json(report.to_dict()), args.out)
    for r in report.failures:
        print(f"FAIL {r.id}: expected {r.expected}, got {r.actual} (tol {r.tolerance}) {r.note}".rstrip(),
              file=sys.stderr)
    return EXIT_OK if report.overall_pass else EXIT_FAIL


def cmd_wsq(args) -> int:
    quad = w_squared_quadrature(args.tol)
    result = {"w2_quadrature": quad, "w_variance": w_variance_quadrature(args.tol)}
    if not args.fast:
        est, se = w_squared_montecarlo(args.paths, args.steps, SeededStream(args.seed))
        result.update(w2_montecarlo=float(est), mc_standard_error=float(se),
                      sigma=abs(quad - float(est)) / float(se), paths=args.paths, steps=args.steps,
                      seed=args.seed)
    _emit(_json(result), args.out)
    return EXIT_OK


def cmd_asymptotics(args) -> int:
    h = args.h
    if not h > 1:
        raise ValueError("--h must be > 1")
    p = solve_B(h, RMode.UNIT)
    e0 = energy0_two(h, RMode.UNIT, point=p)
    asym = asymptotic_energy(h)
    result = {
        "h": h,
        "B": p.B,
        "B_over_log_h": p.B / math.log(h),
        "B_asymptotic": asymptotic_B(h),
        "E0": e0,
        "E0_rewritten_form": energy0_two_appD_form(h, p.B),
        "E0_asymptotic": asym,
        "asymptotic_over_numerical": asym / e0,
    }
    try:
        s = saddle_B(h)
        result.update(saddle_B=s.B, saddle_xi=s.xi, saddle_B_minus_asymptotic=s.B - (math.log(h) - C - 2.0),
                      saddle_f_second=s.f_second)
    except DomainError as exc:
        result["saddle_error"] = str(exc)
    _emit(_json(result), args.out)
    return EXIT_OK


COMMANDS = {
    "table": cmd_table,
    "scan": cmd_scan,
    "verify": cmd_verify,
    "wsq": cmd_wsq,
    "asymptotics": cmd_asymptotics,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return COMMANDS[args.command](args)
    except OSError as exc:
        print(f"quartic: I/O error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, QuarticError) as exc:
        print(f"quartic: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
