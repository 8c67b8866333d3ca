"""Elementary wave curves of the pressured system in the (rho, v) plane.

Pressure is ``p(rho) = ((gamma-1)/4) rho^(gamma-1)``; with ``theta = (gamma-1)/2``
the characteristic speeds are ``v + beta t -/+ theta rho^theta`` and the Riemann
invariants are ``v +/- rho^theta``.

Every curve is evaluated internally as a function of ``s = ln rho``.  Near
``gamma = 1`` the intermediate density of a two-shock solution leaves double
range long before the velocities or speeds do, so only the log is kept exact.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .core import (
    Gamma,
    InvalidInputError,
    Region,
    RiemannSetup,
    ShiftedState,
    SolverError,
    _exp,
    as_gamma,
)

TIE_TOL = 1e-12
LOG_EPS = math.log(1e-300)
MAX_DOUBLINGS = 200
MAX_HALVINGS = 400


class VacuumRegionError(SolverError):
    """The data lie in region V: no intermediate state exists."""


class WaveKind(enum.Enum):
    SHOCK = "shock"
    RAREFACTION = "rarefaction"
    VACUUM = "vacuum"


@dataclass(frozen=True)
class CurveBranch:
    family: int
    kind: WaveKind

    def __post_init__(self):
        if self.family not in (1, 2):
            raise InvalidInputError("family must be 1 or 2")


@dataclass(frozen=True)
class IntermediateState:
    rho_star: float
    v_star: float
    residual: float
    log_rho_star: float

    @property
    def state(self) -> ShiftedState:
        return ShiftedState(self.rho_star, self.v_star, self.log_rho_star)

    @property
    def log10_rho_star(self) -> float:
        return self.log_rho_star / math.log(10.0)


# -- guarded elementary functions -------------------------------------------------

def _expm1(x: float) -> float:
    if x > 709.78:
        return math.inf
    return math.expm1(x)


def _pow_log(s: float, e: float) -> float:
    """``exp(e * s)``, i.e. ``rho**e`` given ``s = ln rho``."""
    if s == -math.inf:
        return 0.0 if e > 0 else math.inf
    return _exp(e * s)


def _hugoniot_jump(s: float, s_ref: float, theta: float) -> float:
    """Signed ``Phi(rho, rho_ref) * (rho - rho_ref)``.

    Uses ``theta (rho^2theta - b^2theta) (rho - b)/(rho + b)`` with the
    difference of powers as ``b^2theta expm1(2 theta d)`` and the density ratio
    as ``tanh(d/2)``, ``d = s - s_ref``.
    """
    d = s - s_ref
    if d == 0.0:
        return 0.0
    sq = theta * _pow_log(s_ref, 2.0 * theta) * _expm1(2.0 * theta * d) * math.tanh(0.5 * d)
    return math.copysign(math.sqrt(sq), d)


def _rho_phi(s_a: float, s_b: float, theta: float) -> float:
    """``rho_a * Phi(rho_a, rho_b)`` (always >= 0); continuous at ``rho_a = rho_b``."""
    d = s_a - s_b
    if d == 0.0:
        return theta * _pow_log(s_b, theta)
    if s_a == -math.inf:
        return 0.0
    den = -_expm1(-2.0 * d)
    if math.isinf(den):
        return 0.0
    return math.sqrt(theta * _pow_log(s_b, 2.0 * theta) * _expm1(2.0 * theta * d) / den)


# -- pointwise quantities -----------------------------------------------------------

def pressure(rho: float, gamma: Gamma | float) -> float:
    g = as_gamma(gamma)
    if rho == 0.0:
        return 0.0
    return 0.5 * g.theta * rho ** (g.value - 1.0)


def _pressure_log(s: float, theta: float) -> float:
    return 0.5 * theta * _pow_log(s, 2.0 * theta)


def characteristic_speeds(s: ShiftedState, t: float, gamma: Gamma | float,
                          beta: float) -> tuple[float, float]:
    """Physical-frame eigenvalues ``(lambda_1, lambda_2)`` at time ``t``."""
    th = as_gamma(gamma).theta
    if s.rho == 0.0 and s.log_rho is None:
        raise InvalidInputError("characteristic speeds are undefined at vacuum")
    c = th * _pow_log(s.ln_rho, th)
    base = s.v + beta * t
    return base - c, base + c


def riemann_invariants(s: ShiftedState, gamma: Gamma | float) -> tuple[float, float]:
    """``(w, z) = (v + rho^theta, v - rho^theta)``."""
    r = _pow_log(s.ln_rho, as_gamma(gamma).theta)
    return s.v + r, s.v - r


def phi(a: float, b: float, gamma: Gamma | float) -> float:
    """Hugoniot slope ``sqrt(theta (a^(g-1) - b^(g-1)) / ((a+b)(a-b)))``.

    At ``a == b`` the analytic limit ``theta b^(theta-1)`` is returned.
    """
    th = as_gamma(gamma).theta
    if a == b:
        return th * b ** (th - 1.0)
    return _hugoniot_jump(math.log(a), math.log(b), th) / (a - b)


def _forward_1(s: float, s_l: float, v_l: float, theta: float) -> float:
    if s <= s_l:
        # rarefaction branch: w = v + rho^theta is constant
        return v_l - _pow_log(s_l, theta) * _expm1(theta * (s - s_l))
    return v_l - _hugoniot_jump(s, s_l, theta)


def _backward_2(s: float, s_r: float, v_r: float, theta: float) -> float:
    if s <= s_r:
        return v_r + _pow_log(s_r, theta) * _expm1(theta * (s - s_r))
    return v_r + _hugoniot_jump(s, s_r, theta)


def forward_curve_1(rho: float, left: ShiftedState, gamma: Gamma | float) -> float:
    """Velocity of the state at density ``rho`` reachable from ``left`` by a 1-wave.

    Rarefaction branch for ``rho <= rho_left``, shock branch above it; strictly
    decreasing in ``rho``.
    """
    th = as_gamma(gamma).theta
    s = math.log(rho) if rho > 0.0 else -math.inf
    return _forward_1(s, left.ln_rho, left.v, th)


def backward_curve_2(rho: float, right: ShiftedState, gamma: Gamma | float) -> float:
    """Velocity of the state at ``rho`` that connects to ``right`` by a 2-wave.

    Strictly increasing in ``rho``.
    """
    th = as_gamma(gamma).theta
    s = math.log(rho) if rho > 0.0 else -math.inf
    return _backward_2(s, right.ln_rho, right.v, th)


def shock_speed(family: int, left: ShiftedState, right: ShiftedState, t: float,
                gamma: Gamma | float, beta: float) -> float:
    """Physical-frame speed of a ``family`` shock joining ``left`` to ``right``.

    ``sigma_1 = v_L + beta t - rho_R Phi`` and ``sigma_2 = v_L + beta t + rho_R Phi``;
    both equal ``[rho (v + beta t)] / [rho]`` when the states lie on the
    corresponding Hugoniot branch.
    """
    if family not in (1, 2):
        raise InvalidInputError("family must be 1 or 2")
    sl, sr = left.ln_rho, right.ln_rho
    if sl == sr:
        raise InvalidInputError("shock speed is undefined for equal densities")
    rp = _rho_phi(sr, sl, as_gamma(gamma).theta)
    sign = -1.0 if family == 1 else 1.0
    return left.v + beta * t + sign * rp


def lax_satisfied(family: int, left: ShiftedState, right: ShiftedState, t: float,
                  gamma: Gamma | float, beta: float) -> bool:
    """Strict Lax inequalities for a shock of the given family."""
    sigma = shock_speed(family, left, right, t, gamma, beta)
    l1_l, l2_l = characteristic_speeds(left, t, gamma, beta)
    l1_r, l2_r = characteristic_speeds(right, t, gamma, beta)
    if family == 1:
        return sigma < l1_l and l1_r < sigma < l2_r
    return l1_l < sigma < l2_l and l2_r < sigma


# -- intermediate state ---------------------------------------------------------------

def _curve_gap(setup: RiemannSetup):
    th = setup.require_gamma().theta
    s_l, v_l = math.log(setup.left.rho), setup.left.u
    s_r, v_r = math.log(setup.right.rho), setup.right.u

    def gap(s: float) -> float:
        return _forward_1(s, s_l, v_l, th) - _backward_2(s, s_r, v_r, th)

    return gap


def vacuum_gap(setup: RiemannSetup) -> float:
    """``rho_-^theta + rho_+^theta - (u_+ - u_-)``; region V iff this is <= 0."""
    th = setup.require_gamma().theta
    return (setup.left.rho ** th + setup.right.rho ** th) - (setup.right.u - setup.left.u)


def solve_intermediate(setup: RiemannSetup) -> IntermediateState:
    """Intersection of the forward 1-curve of the left state and the backward
    2-curve of the right state.

    The gap ``F = forward_curve_1 - backward_curve_2`` is strictly decreasing,
    so plain bisection in ``ln rho`` is safe.

    Raises
    ------
    VacuumRegionError
        If the data lie in region V.
    SolverError
        If no sign change is found after the bracket has been doubled
        ``MAX_DOUBLINGS`` times.
    """
    if vacuum_gap(setup) <= 0.0:
        raise VacuumRegionError("region V: the 1- and 2-rarefactions do not meet")
    gap = _curve_gap(setup)

    lo = LOG_EPS
    step = 1.0
    n = 0
    while gap(lo) <= 0.0:
        lo -= step
        step *= 2.0
        n += 1
        if n > MAX_DOUBLINGS:
            raise SolverError("could not bracket the intermediate density from below")

    hi = math.log(max(setup.left.rho, setup.right.rho))
    step = math.log(2.0)
    n = 0
    while gap(hi) > 0.0:
        hi += step
        step *= 2.0
        n += 1
        if n > MAX_DOUBLINGS:
            raise SolverError("could not bracket the intermediate density from above")
    for _ in range(MAX_HALVINGS):
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if gap(mid) > 0.0:
            lo = mid
        else:
            hi = mid
    s_star = lo if abs(gap(lo)) <= abs(gap(hi)) else hi

    th = setup.gamma.theta
    v_star = _forward_1(s_star, math.log(setup.left.rho), setup.left.u, th)
    return IntermediateState(_exp(s_star), v_star, abs(gap(s_star)), s_star)


def _is_tie(s_star: float, s_ref: float) -> bool:
    d = s_star - s_ref
    return abs(d) < 1.0 and abs(math.expm1(d)) <= TIE_TOL


def wave_branches(setup: RiemannSetup, inter: IntermediateState) -> tuple[WaveKind | None,
                                                                          WaveKind | None]:
    """Kinds of the 1- and 2-waves (``None`` for a zero-strength wave)."""
    out = []
    for ref in (setup.left.rho, setup.right.rho):
        s_ref = math.log(ref)
        if _is_tie(inter.log_rho_star, s_ref):
            out.append(None)
        elif inter.log_rho_star > s_ref:
            out.append(WaveKind.SHOCK)
        else:
            out.append(WaveKind.RAREFACTION)
    return out[0], out[1]


def region_of(setup: RiemannSetup, inter: IntermediateState) -> Region:
    k1, k2 = wave_branches(setup, inter)
    shock1, shock2 = k1 is WaveKind.SHOCK, k2 is WaveKind.SHOCK
    if shock1 and shock2:
        return Region.IV
    if shock1:
        return Region.II
    if shock2:
        return Region.III
    return Region.I


def classify_region(setup: RiemannSetup) -> Region:
    """Which of the five phase-plane regions the right state falls in."""
    if vacuum_gap(setup) <= 0.0:
        return Region.V
    return region_of(setup, solve_intermediate(setup))
