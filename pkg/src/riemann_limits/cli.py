"""Command-line front end: ``riemann-limits <subcommand> [flags]``.

Exit codes are 0 on success, 2 on invalid input and 3 when a solver or the
simulator fails.  A flat JSON object given with ``--config`` supplies default
flag values (keys are long flag names with underscores); flags given on the
command line win.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import io
from .core import InvalidInputError, RiemannSetup, SolverError
from .exact import build_wave_fan, discontinuities, sample_arrays
from .limits import gamma_threshold_region1, gamma_threshold_region4, sweep_gamma
from .pressureless import (DeltaMarker, PressurelessKind, evaluate_pressureless,
                           solve_pressureless)

EXIT_OK, EXIT_INVALID, EXIT_FAILURE = 0, 2, 3

DEFAULTS = {
    "beta": 0.0,
    "t": 0.2,
    "xmin": -1.0,
    "xmax": 1.0,
    "n": 200,
    "cfl": 0.4,
    "mode": "direct",
    "exclusion_radius": 0.0,
}


class UsageError(InvalidInputError):
    pass


def _float_list(text: str) -> list[float]:
    try:
        return [float(s) for s in str(text).split(",") if s.strip()]
    except ValueError as exc:
        raise UsageError(f"bad number list {text!r}") from exc


def build_parser() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--config", help="JSON file with default flag values")
    shared.add_argument("--rho-l", type=float)
    shared.add_argument("--u-l", type=float)
    shared.add_argument("--rho-r", type=float)
    shared.add_argument("--u-r", type=float)
    shared.add_argument("--gamma", type=float)
    shared.add_argument("--beta", type=float)
    shared.add_argument("--t", type=float, help="output time")
    shared.add_argument("--xmin", type=float)
    shared.add_argument("--xmax", type=float)
    shared.add_argument("--n", type=int, help="number of sample points / cells")
    shared.add_argument("--out", help="output CSV (stdout when omitted)")

    p = argparse.ArgumentParser(prog="riemann-limits",
                                description="Riemann problems for gas dynamics with a constant source term")
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("exact", parents=[shared], help="exact profile at time t")
    sub.add_parser("pressureless", parents=[shared], help="pressureless profile at time t")
    sw = sub.add_parser("sweep", parents=[shared], help="intermediate state versus gamma")
    sw.add_argument("--gammas", help="comma-separated, strictly decreasing")
    sub.add_parser("thresholds", parents=[shared], help="gamma-bar thresholds")
    sim = sub.add_parser("simulate", parents=[shared], help="WENO5 simulation")
    sim.add_argument("--cfl", type=float)
    sim.add_argument("--mode", choices=("direct", "shifted"))
    sim.add_argument("--snapshots", help="comma-separated output times")
    cmp_ = sub.add_parser("compare", parents=[shared], help="L1 distance of two profiles")
    cmp_.add_argument("--exact")
    cmp_.add_argument("--numeric")
    cmp_.add_argument("--exclusion-radius", type=float)
    return p


def resolve_options(ns: argparse.Namespace) -> dict:
    """Merge command-line flags over the JSON config over built-in defaults."""
    opts = dict(DEFAULTS)
    if ns.config:
        try:
            cfg = json.loads(Path(ns.config).read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read config {ns.config}: {exc}") from exc
        if not isinstance(cfg, dict):
            raise UsageError("the config file must hold a flat JSON object")
        known = set(vars(ns))
        unknown = set(cfg) - known
        if unknown:
            raise UsageError(f"unknown config keys: {', '.join(sorted(unknown))}")
        opts.update(cfg)
    opts.update({k: v for k, v in vars(ns).items() if v is not None})
    return opts


def _setup(opts: dict, need_gamma: bool = True) -> RiemannSetup:
    missing = [k for k in ("rho_l", "u_l", "rho_r", "u_r") if opts.get(k) is None]
    if need_gamma and opts.get("gamma") is None:
        missing.append("gamma")
    if missing:
        raise UsageError("missing " + ", ".join("--" + m.replace("_", "-") for m in missing))
    try:
        return RiemannSetup.from_values(float(opts["rho_l"]), float(opts["u_l"]),
                                        float(opts["rho_r"]), float(opts["u_r"]),
                                        opts.get("gamma"), float(opts["beta"]))
    except (TypeError, ValueError) as exc:
        raise UsageError(str(exc)) from exc


def _grid(opts: dict) -> np.ndarray:
    """Cell centres of ``n`` uniform cells on ``[xmin, xmax]``."""
    n, a, b = int(opts["n"]), float(opts["xmin"]), float(opts["xmax"])
    if n < 2 or not a < b:
        raise UsageError("need n >= 2 and xmin < xmax")
    return a + (np.arange(n) + 0.5) * (b - a) / n


def _time(opts: dict) -> float:
    t = float(opts["t"])
    if not t > 0.0:
        raise UsageError("--t must be positive")
    return t


def _target(opts: dict):
    return opts.get("out") or sys.stdout


def cmd_exact(opts: dict) -> None:
    fan = build_wave_fan(_setup(opts))
    xs = _grid(opts)
    rho, u = sample_arrays(fan, _time(opts), xs)
    io.write_profile(_target(opts), io.profile_rows(xs, rho, u))


def cmd_pressureless(opts: dict) -> None:
    setup = _setup(opts, need_gamma=False)
    sol = solve_pressureless(setup)
    t = _time(opts)
    rows = []
    for x in _grid(opts):
        val = evaluate_pressureless(sol, t, float(x))
        if isinstance(val, DeltaMarker):
            # the measure lives in the sidecar; the row carries the right limit
            rows.append(io.ProfileRow(float(x), setup.right.rho, setup.right.u + setup.beta * t))
        else:
            rows.append(io.ProfileRow(float(x), val.rho, val.u))
    io.write_profile(_target(opts), rows)
    if sol.kind is PressurelessKind.DELTA_SHOCK and opts.get("out"):
        io.write_delta(io.delta_sidecar_path(opts["out"]), sol.delta, [t])


def cmd_sweep(opts: dict) -> None:
    if not opts.get("gammas"):
        raise UsageError("sweep needs --gammas")
    gammas = _float_list(opts["gammas"])
    records = sweep_gamma(_setup(opts, need_gamma=False), gammas)
    io.write_sweep(_target(opts), records)


def cmd_thresholds(opts: dict) -> None:
    setup = _setup(opts, need_gamma=False)
    rows = []
    for name, fn in (("region4", gamma_threshold_region4), ("region1", gamma_threshold_region1)):
        try:
            rows.append((name, io.fmt(fn(setup))))
        except InvalidInputError:
            rows.append((name, "nan"))
    io.write_table(_target(opts), ("threshold", "gamma_bar"), rows)


def snapshot_path(out: str, t: float, many: bool) -> str:
    if not many:
        return out
    p = Path(out)
    return str(p.with_name(f"{p.stem}_t{t!r}{p.suffix}"))


def cmd_simulate(opts: dict) -> None:
    from .weno import SimConfig, simulate

    setup = _setup(opts)
    times = _float_list(opts["snapshots"]) if opts.get("snapshots") else [_time(opts)]
    cfg = SimConfig(setup, float(opts["xmin"]), float(opts["xmax"]), int(opts["n"]),
                    float(opts["cfl"]), max(times), str(opts["mode"]))
    snaps = simulate(cfg, times)
    many = len(snaps) > 1
    if many and not opts.get("out"):
        raise UsageError("several snapshots need --out")
    for sn in snaps:
        rows = io.profile_rows(sn.x, sn.rho, sn.u)
        target = snapshot_path(opts["out"], sn.t, many) if opts.get("out") else sys.stdout
        io.write_profile(target, rows)


def cmd_compare(opts: dict) -> None:
    if not (opts.get("exact") and opts.get("numeric")):
        raise UsageError("compare needs --exact and --numeric")
    try:
        exact = io.read_profile(opts["exact"])
        numeric = io.read_profile(opts["numeric"])
    except (OSError, ValueError) as exc:
        raise UsageError(str(exc)) from exc
    jumps: list[float] = []
    if all(opts.get(k) is not None for k in ("rho_l", "u_l", "rho_r", "u_r", "gamma")):
        jumps = discontinuities(build_wave_fan(_setup(opts)), _time(opts))
    m = io.compare_profiles(exact, numeric, float(opts["exclusion_radius"]), jumps)
    io.write_metrics(_target(opts), m)


COMMANDS = {
    "exact": cmd_exact,
    "pressureless": cmd_pressureless,
    "sweep": cmd_sweep,
    "thresholds": cmd_thresholds,
    "simulate": cmd_simulate,
    "compare": cmd_compare,
}


def run_command(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INVALID
    try:
        COMMANDS[ns.command](resolve_options(ns))
    except InvalidInputError as exc:
        print(f"riemann-limits: error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except SolverError as exc:
        print(f"riemann-limits: solver failure: {exc}", file=sys.stderr)
        return EXIT_FAILURE
    except OSError as exc:
        print(f"riemann-limits: error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    return EXIT_OK


def main() -> None:
    sys.exit(run_command())


if __name__ == "__main__":
    main()
