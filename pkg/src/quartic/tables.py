"""Row builders and CSV rendering shared by the CLI and the verification report."""

from __future__ import annotations

import io
import math
import os
import tempfile
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from . import onedim, oracles, reference, zerodim
from .errors import InvalidArgument
from .twodim import RMode, energy0_two, solve_B

TABLE1_HEADER = ("h",) + reference.TABLE1_COLUMNS + tuple(f"d{c}" for c in reference.TABLE1_COLUMNS)
TABLE2_HEADER = ("h",) + reference.TABLE2_COLUMNS + tuple(f"d{c}" for c in reference.TABLE2_COLUMNS)
SCAN_HEADERS = {
    0: ("h", "E0", "E1", "G0", "G1"),
    1: ("h", "E0", "dE1_lower", "dE1_upper", "E1_lower", "E1_upper"),
    2: ("h", "B", "E0", "r_mode"),
}


def default_threads() -> int:
    env = os.environ.get("QUARTIC_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def _map(fn, items, threads):
    # ordered map: output order never depends on scheduling
    if threads <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))


def table1_row(h, tol=1e-10):
    r = zerodim.evaluate_zero(h, tol)
    vals = (r.E0, r.E1, oracles.exact_energy_zero(h), r.G0, r.G1, oracles.exact_green_zero(h))
    dev = tuple(abs(v - p) for v, p in zip(vals, reference.TABLE1[h]))
    return (h,) + vals + dev


def table2_row(h, basis_size=400):
    vals = (onedim.energy0_one(h), onedim.energy_osc(h), oracles.exact_energy_one(h, basis_size))
    dev = tuple(abs(v - p) for v, p in zip(vals, reference.TABLE2[h]))
    return (h,) + vals + dev


def compute_table(table_id: int, threads: int = 1, tol: float = 1e-10):
    if table_id == 1:
        return TABLE1_HEADER, _map(lambda h: table1_row(h, tol), list(reference.TABLE1), threads)
    if table_id == 2:
        return TABLE2_HEADER, _map(table2_row, list(reference.TABLE2), threads)
    raise InvalidArgument(f"table id must be 1 or 2, got {table_id}")


def coupling_grid(h_min: float, h_max: float, points: int, log: bool = True):
    if not (h_min > 0 and h_max >= h_min and points >= 1):
        raise InvalidArgument(f"need 0 < h_min <= h_max and points >= 1, got {h_min}, {h_max}, {points}")
    if points == 1:
        return [float(h_min)]
    grid = np.geomspace(h_min, h_max, points) if log else np.linspace(h_min, h_max, points)
    return [float(h) for h in grid]


def scan_row(dim: int, h: float, r_mode=RMode.AUTO, tol: float = 1e-10):
    if dim == 0:
        r = zerodim.evaluate_zero(h, tol)
        return (h, r.E0, r.E1, r.G0, r.G1)
    if dim == 1:
        e0 = onedim.energy0_one(h)
        b = onedim.delta_e1_bounds(h)
        return (h, e0, b.lower, b.upper, e0 + b.lower, e0 + b.upper)
    if dim == 2:
        mode = RMode(r_mode).resolve(h)
        p = solve_B(h, mode)
        return (h, p.B, energy0_two(h, mode, point=p), mode.value)
    raise InvalidArgument(f"dimension must be 0, 1 or 2, got {dim}")


def compute_scan(dim, h_values, r_mode=RMode.AUTO, threads=1, tol=1e-10):
    if dim not in SCAN_HEADERS:
        raise InvalidArgument(f"dimension must be 0, 1 or 2, got {dim}")
    return SCAN_HEADERS[dim], _map(lambda h: scan_row(dim, h, r_mode, tol), h_values, threads)


def _fmt(v) -> str:
    if isinstance(v, str):
        return v
    if isinstance(v, (int, np.integer)) and not isinstance(v, bool):
        return str(v)
    v = float(v)
    if not math.isfinite(v):
        return repr(v)
    return f"{v:.8g}"


def render_csv(header, rows) -> str:
    buf = io.StringIO()
    buf.write(",".join(header) + "\n")
    for row in rows:
        buf.write(",".join(_fmt(v) for v in row) + "\n")
    return buf.getvalue()


def write_atomic(path, text: str) -> None:
    """Write ``text`` to ``path`` through a temporary file in the same
    directory, so a failure never leaves a partial file behind."""
    path = os.fspath(path)
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".quartic-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
