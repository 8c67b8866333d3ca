"""Exact Riemann solution of the friction system for gamma in (1, 2).

With ``y = x - beta t^2 / 2`` and ``v = u - beta t`` the system is the
homogeneous one, so the solution depends on ``xi = y / t`` only.  A fan is
built once in ``xi`` and sampled at any ``(t, x)``; physical variables are
restored as the last step.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .core import (FluidState, Gamma, InvalidInputError, Region, RiemannSetup, ShiftedState,
                   as_gamma)
from .wave_curves import (
    IntermediateState,
    WaveKind,
    _pow_log,
    _pressure_log,
    characteristic_speeds,
    region_of,
    shock_speed,
    solve_intermediate,
    vacuum_gap,
    wave_branches,
)


@dataclass(frozen=True)
class WaveDescriptor:
    kind: WaveKind
    family: int | None
    xi_left: float
    xi_right: float
    left: ShiftedState
    right: ShiftedState

    def __post_init__(self):
        if not self.xi_left <= self.xi_right:
            raise InvalidInputError("wave edges out of order")
        if self.kind is WaveKind.SHOCK and self.xi_left != self.xi_right:
            raise InvalidInputError("a shock has a single speed")

    @property
    def speed(self) -> float:
        return self.xi_left


@dataclass(frozen=True)
class WaveFan:
    setup: RiemannSetup
    region: Region
    waves: tuple[WaveDescriptor, ...]
    intermediate: IntermediateState | None

    @property
    def gamma(self) -> Gamma:
        return self.setup.gamma


def _rarefaction(family: int, a: ShiftedState, b: ShiftedState, g: Gamma) -> WaveDescriptor:
    lam = 0 if family == 1 else 1
    xa = characteristic_speeds(a, 0.0, g, 0.0)[lam] if a.ln_rho > -math.inf else a.v
    xb = characteristic_speeds(b, 0.0, g, 0.0)[lam] if b.ln_rho > -math.inf else b.v
    return WaveDescriptor(WaveKind.RAREFACTION, family, xa, xb, a, b)


def build_wave_fan(setup: RiemannSetup) -> WaveFan:
    """Solve the Riemann problem and return its ordered wave structure in ``xi``."""
    g = setup.require_gamma()
    th = g.theta
    left = ShiftedState(setup.left.rho, setup.left.u)
    right = ShiftedState(setup.right.rho, setup.right.u)

    if vacuum_gap(setup) <= 0.0:
        w_l = left.v + left.rho ** th
        z_r = right.v - right.rho ** th
        vac_l, vac_r = ShiftedState(0.0, w_l), ShiftedState(0.0, z_r)
        waves = (
            _rarefaction(1, left, vac_l, g),
            WaveDescriptor(WaveKind.VACUUM, None, w_l, z_r, vac_l, vac_r),
            _rarefaction(2, vac_r, right, g),
        )
        return WaveFan(setup, Region.V, waves, None)

    inter = solve_intermediate(setup)
    mid = inter.state
    k1, k2 = wave_branches(setup, inter)
    waves = []
    if k1 is WaveKind.SHOCK:
        xi = shock_speed(1, left, mid, 0.0, g, 0.0)
        waves.append(WaveDescriptor(WaveKind.SHOCK, 1, xi, xi, left, mid))
    elif k1 is WaveKind.RAREFACTION:
        waves.append(_rarefaction(1, left, mid, g))
    if k2 is WaveKind.SHOCK:
        xi = shock_speed(2, mid, right, 0.0, g, 0.0)
        waves.append(WaveDescriptor(WaveKind.SHOCK, 2, xi, xi, mid, right))
    elif k2 is WaveKind.RAREFACTION:
        waves.append(_rarefaction(2, mid, right, g))
    return WaveFan(setup, region_of(setup, inter), tuple(waves), inter)


def _fan_interior(wave: WaveDescriptor, xi: float, th: float) -> tuple[float, float]:
    if wave.family == 1:
        w = wave.left.v + _pow_log(wave.left.ln_rho, th)
        r_th = (w - xi) / (1.0 + th)
        v = w - r_th
    else:
        z = wave.right.v - _pow_log(wave.right.ln_rho, th)
        r_th = (xi - z) / (1.0 + th)
        v = z + r_th
    rho = math.exp(math.log(r_th) / th) if r_th > 0.0 else 0.0
    return rho, v


def sample_shifted(fan: WaveFan, xi: float) -> tuple[float, float]:
    """``(rho, v)`` on the ray ``xi``; vacuum reports ``v = xi``."""
    th = fan.setup.gamma.theta
    cur = ShiftedState(fan.setup.left.rho, fan.setup.left.u)
    for wave in fan.waves:
        if xi < wave.xi_left:
            return cur.rho, cur.v
        if wave.kind is WaveKind.RAREFACTION and xi <= wave.xi_right:
            return _fan_interior(wave, xi, th)
        if wave.kind is WaveKind.VACUUM and xi <= wave.xi_right:
            return 0.0, xi
        # shocks fall through here at xi == speed: the right limit is returned
        cur = wave.right
    return cur.rho, cur.v


def evaluate_exact(fan: WaveFan, t: float, x: float) -> FluidState:
    if not t > 0.0:
        raise InvalidInputError("the solution is sampled at t > 0 only")
    beta = fan.setup.beta
    xi = (x - 0.5 * beta * t * t) / t
    rho, v = sample_shifted(fan, xi)
    return FluidState(rho, v + beta * t)


def sample_profile(fan: WaveFan, t: float, xs: Sequence[float]) -> list[FluidState]:
    return [evaluate_exact(fan, t, float(x)) for x in xs]


def sample_arrays(fan: WaveFan, t: float, xs) -> tuple[np.ndarray, np.ndarray]:
    """Array form of :func:`sample_profile`: ``(rho, u)``."""
    prof = sample_profile(fan, t, np.asarray(xs, dtype=float))
    return (np.array([p.rho for p in prof]), np.array([p.u for p in prof]))


def rankine_hugoniot_residual(wave: WaveDescriptor, t: float, gamma: Gamma | float,
                              beta: float) -> tuple[float, float]:
    """Jump-condition residuals across a shock at time ``t``.

    ``r1`` is the mass residual ``-sigma [rho] + [rho (v + beta t)]`` divided by
    the larger of the two densities; ``r2`` is the velocity-equation residual
    ``-sigma [v] + [(v + beta t)^2/2 + p]``.
    """
    if wave.kind is not WaveKind.SHOCK:
        raise InvalidInputError("jump conditions apply to shocks only")
    th = as_gamma(gamma).theta
    sigma = wave.speed + beta * t
    a, b = wave.left, wave.right
    s_top = max(a.ln_rho, b.ln_rho)
    ra = math.exp(a.ln_rho - s_top) if s_top > -math.inf else 0.0
    rb = math.exp(b.ln_rho - s_top) if s_top > -math.inf else 0.0
    ua, ub = a.v + beta * t, b.v + beta * t
    r1 = -sigma * (rb - ra) + (rb * ub - ra * ua)
    r2 = (-sigma * (b.v - a.v)
          + (0.5 * ub * ub + _pressure_log(b.ln_rho, th))
          - (0.5 * ua * ua + _pressure_log(a.ln_rho, th)))
    return r1, r2


def discontinuities(fan: WaveFan, t: float) -> list[float]:
    """Physical positions of shocks and vacuum edges at time ``t``."""
    shift = 0.5 * fan.setup.beta * t * t
    out = []
    for wave in fan.waves:
        if wave.kind is WaveKind.SHOCK:
            out.append(wave.speed * t + shift)
        elif wave.kind is WaveKind.VACUUM:
            out.extend([wave.xi_left * t + shift, wave.xi_right * t + shift])
    return out
