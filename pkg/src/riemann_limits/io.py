"""CSV serialization of profiles and sweeps, and exact-vs-numeric comparison.

All files are UTF-8 with LF line endings and a single header row.  Floats are
written with 17 significant digits so that a write/read round trip is exact;
undefined values (vacuum velocity, failed sweep entries) use the token ``nan``.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .core import InvalidInputError
from .limits import SweepRecord
from .pressureless import DeltaShock

PROFILE_HEADER = ("x", "rho", "u")
SWEEP_HEADER = ("gamma", "region", "rho_star_log10", "v_star", "s1", "s2", "a_gamma",
                "mass_rate")
DELTA_HEADER = ("t", "x_delta", "weight", "u_delta")
METRICS_HEADER = ("l1_rho", "l1_u", "excluded_intervals")


def fmt(x: float) -> str:
    """Shortest-safe text for a float: 17 significant digits, ``nan``/``inf`` literal."""
    x = float(x)
    if math.isnan(x):
        return "nan"
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    return format(x, ".17g")


@dataclass(frozen=True)
class ProfileRow:
    x: float
    rho: float
    u: float


@dataclass(frozen=True)
class ErrorMetrics:
    l1_rho: float
    l1_u: float
    excluded_intervals: list[tuple[float, float]] = field(default_factory=list)


def write_table(path, header: Sequence[str], rows: Iterable[Sequence[str]]) -> None:
    """Write a CSV file; ``path`` may also be an open text stream."""
    if hasattr(path, "write"):
        w = csv.writer(path, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
        return
    with open(path, "w", encoding="utf-8", newline="") as fh:
        write_table(fh, header, rows)


def _read_rows(path, header: Sequence[str]) -> list[list[str]]:
    with open(path, encoding="utf-8", newline="") as fh:
        rows = list(csv.reader(fh))
    if not rows or tuple(rows[0]) != tuple(header):
        raise InvalidInputError(f"{path}: expected header {','.join(header)}")
    return rows[1:]


def profile_rows(xs, rho, u) -> list[ProfileRow]:
    return [ProfileRow(float(a), float(b), float(c)) for a, b, c in zip(xs, rho, u)]


def write_profile(path, rows: Sequence[ProfileRow]) -> None:
    xs = [r.x for r in rows]
    if any(b <= a for a, b in zip(xs, xs[1:])):
        raise InvalidInputError("profile rows must be sorted by strictly increasing x")
    write_table(path, PROFILE_HEADER, ((fmt(r.x), fmt(r.rho), fmt(r.u)) for r in rows))


def read_profile(path) -> list[ProfileRow]:
    rows = [ProfileRow(float(a), float(b), float(c))
            for a, b, c in _read_rows(path, PROFILE_HEADER)]
    xs = [r.x for r in rows]
    if any(b <= a for a, b in zip(xs, xs[1:])):
        raise InvalidInputError(f"{path}: x is not strictly increasing")
    return rows


def write_sweep(path, records: Sequence[SweepRecord]) -> None:
    def row(r: SweepRecord):
        region = r.region.name if r.region is not None else "nan"
        return (fmt(r.gamma), region, fmt(r.rho_star_log10), fmt(r.v_star), fmt(r.s1),
                fmt(r.s2), fmt(r.a_gamma), fmt(r.mass_rate))

    write_table(path, SWEEP_HEADER, (row(r) for r in records))


def read_sweep(path) -> list[dict]:
    out = []
    for vals in _read_rows(path, SWEEP_HEADER):
        rec = {k: float(v) for k, v in zip(SWEEP_HEADER, vals) if k != "region"}
        rec["region"] = vals[1]
        out.append(rec)
    return out


def delta_sidecar_path(out) -> Path:
    return Path(f"{out}.delta.csv")


def write_delta(path, ds: DeltaShock, times: Sequence[float]) -> None:
    write_table(path, DELTA_HEADER, ((fmt(t), fmt(ds.position(t)), fmt(ds.weight(t)),
                                      fmt(ds.speed(t))) for t in times))


def read_delta(path) -> list[tuple[float, ...]]:
    return [tuple(float(v) for v in r) for r in _read_rows(path, DELTA_HEADER)]


def write_metrics(path, m: ErrorMetrics) -> None:
    iv = ";".join(f"{fmt(a)}:{fmt(b)}" for a, b in m.excluded_intervals)
    write_table(path, METRICS_HEADER, [(fmt(m.l1_rho), fmt(m.l1_u), iv)])


def _merge(intervals: list[tuple[float, float]]) -> list[tuple[float, float]]:
    out: list[list[float]] = []
    for a, b in sorted(intervals):
        if out and a <= out[-1][1]:
            out[-1][1] = max(out[-1][1], b)
        else:
            out.append([a, b])
    return [(a, b) for a, b in out]


def _l1(x: np.ndarray, err: np.ndarray, keep: np.ndarray) -> float:
    seg = 0.5 * (err[:-1] + err[1:]) * np.diff(x)
    ok = keep & np.isfinite(seg)
    return float(np.sum(seg[ok]))


def compare_profiles(exact: Sequence[ProfileRow], numeric: Sequence[ProfileRow],
                     exclusion_radius: float = 0.0,
                     discontinuities: Sequence[float] = ()) -> ErrorMetrics:
    """L1 distances between two profiles on their common ``x`` range.

    Both profiles are linearly resampled onto the union of their abscissae
    inside the common range, and the absolute differences are integrated with
    the trapezoid rule.  The intervals ``[d - r, d + r]`` around the listed
    discontinuities are removed exactly: their end points join the grid and
    the segments inside them are dropped.  Segments with a ``nan`` endpoint
    (vacuum velocities) are dropped as well.

    Raises
    ------
    InvalidInputError
        If the two ``x`` ranges do not overlap.
    """
    if exclusion_radius < 0.0:
        raise InvalidInputError("exclusion_radius must be non-negative")
    if len(exact) < 2 or len(numeric) < 2:
        raise InvalidInputError("profiles need at least two rows")
    xe = np.array([r.x for r in exact])
    xn = np.array([r.x for r in numeric])
    lo, hi = max(xe[0], xn[0]), min(xe[-1], xn[-1])
    if not lo < hi:
        raise InvalidInputError("profiles cover disjoint x ranges")
    excl = _merge([(max(d - exclusion_radius, lo), min(d + exclusion_radius, hi))
                   for d in discontinuities
                   if d + exclusion_radius >= lo and d - exclusion_radius <= hi])
    x = np.union1d(np.union1d(xe, xn), np.array(excl, dtype=float).ravel())
    x = x[(x >= lo) & (x <= hi)]

    def resample(rows, xs, attr):
        return np.interp(x, xs, np.array([getattr(r, attr) for r in rows]))

    mid = 0.5 * (x[:-1] + x[1:])
    keep = np.ones(len(mid), dtype=bool)
    for a, b in excl:
        keep &= ~((mid > a) & (mid < b))

    d_rho = np.abs(resample(exact, xe, "rho") - resample(numeric, xn, "rho"))
    d_u = np.abs(resample(exact, xe, "u") - resample(numeric, xn, "u"))
    return ErrorMetrics(_l1(x, d_rho, keep), _l1(x, d_u, keep), excl)
