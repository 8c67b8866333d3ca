"""Diagnostics for the gamma -> 1 limits.

Two-shock solutions concentrate: the intermediate density blows up while
``theta rho*^(gamma-1)`` tends to ``(u_- - u_+)^2 / 4``, both shock speeds tend
to ``(u_- + u_+)/2`` and the mass between the shocks grows at the delta-shock
rate ``(rho_- + rho_+)(u_- - u_+)/2``.  Two-rarefaction solutions cavitate: the
intermediate density goes to zero and the outer fan edges approach ``u_-`` and
``u_+``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from .core import InvalidInputError, Region, RiemannSetup, SolverError, as_gamma
from .exact import build_wave_fan, sample_shifted
from .wave_curves import WaveKind, _pow_log

LN10 = math.log(10.0)


@dataclass(frozen=True)
class SweepRecord:
    """One gamma of a sweep.

    ``s1``/``s2`` are the xi-speeds bounding the intermediate plateau (the two
    shock speeds in region IV).  ``rho_star`` may be ``inf``; ``rho_star_log10``
    is always finite unless the data are in region V.
    """

    gamma: float
    region: Region | None
    rho_star: float = math.nan
    rho_star_log10: float = math.nan
    v_star: float = math.nan
    s1: float = math.nan
    s2: float = math.nan
    a_gamma: float = math.nan
    mass_rate: float = math.nan
    error: str | None = None


def _record(setup: RiemannSetup, gamma: float) -> SweepRecord:
    fan = build_wave_fan(setup.with_gamma(gamma))
    th = fan.gamma.theta
    if fan.region is Region.V:
        vac = fan.waves[1]
        return SweepRecord(gamma, Region.V, 0.0, -math.inf, math.nan,
                           vac.xi_left, vac.xi_right, 0.0, 0.0)

    inter = fan.intermediate
    s_star, v_star = inter.log_rho_star, inter.v_star
    r_th = _pow_log(s_star, th)
    by_family = {w.family: w for w in fan.waves}
    rl, ul = setup.left.rho, setup.left.u
    rr, ur = setup.right.rho, setup.right.u

    w1 = by_family.get(1)
    if w1 is None:
        s1, left_mass = v_star - th * r_th, rl * th * r_th
    elif w1.kind is WaveKind.SHOCK:
        s1 = w1.speed
        # rho* (v* - s1) from the mass jump condition, finite even when rho* is not
        left_mass = rl * (ul - s1)
    else:
        s1 = w1.xi_right
        left_mass = inter.rho_star * (v_star - s1)

    w2 = by_family.get(2)
    if w2 is None:
        s2, right_mass = v_star + th * r_th, rr * th * r_th
    elif w2.kind is WaveKind.SHOCK:
        s2 = w2.speed
        right_mass = rr * (s2 - ur)
    else:
        s2 = w2.xi_left
        right_mass = inter.rho_star * (s2 - v_star)

    a_gamma = th * _pow_log(s_star, 2.0 * th)
    return SweepRecord(gamma, fan.region, inter.rho_star, s_star / LN10, v_star,
                       s1, s2, a_gamma, left_mass + right_mass)


def sweep_gamma(setup: RiemannSetup, gammas: Sequence[float]) -> list[SweepRecord]:
    """Solve the same Riemann data for each gamma (sorted descending toward 1).

    A failure at one gamma is stored in that record's ``error`` field.
    """
    gs = [float(g) for g in gammas]
    if any(a <= b for a, b in zip(gs, gs[1:])):
        raise InvalidInputError("gammas must be strictly decreasing toward 1")
    out = []
    for g in gs:
        try:
            as_gamma(g)
            out.append(_record(setup, g))
        except (SolverError, InvalidInputError) as exc:
            out.append(SweepRecord(g, None, error=str(exc)))
    return out


def _strictly_decreasing(xs: Sequence[float]) -> bool:
    return all(b < a for a, b in zip(xs, xs[1:]))


@dataclass(frozen=True)
class LimitReport:
    target_a: float
    target_speed: float
    target_mass_rate: float
    gammas: list[float] = field(default_factory=list)
    err_a: list[float] = field(default_factory=list)
    err_s1: list[float] = field(default_factory=list)
    err_s2: list[float] = field(default_factory=list)
    err_mass_rate: list[float] = field(default_factory=list)

    @property
    def monotone(self) -> bool:
        return all(_strictly_decreasing(e) for e in
                   (self.err_a, self.err_s1, self.err_s2, self.err_mass_rate))

    def relative_errors(self, i: int = -1) -> dict[str, float]:
        speed_scale = abs(self.target_speed) if self.target_speed else 1.0
        return {
            "a": self.err_a[i] / self.target_a,
            "s1": self.err_s1[i] / speed_scale,
            "s2": self.err_s2[i] / speed_scale,
            "mass_rate": self.err_mass_rate[i] / self.target_mass_rate,
        }


def delta_limit_report(setup: RiemannSetup, sweep: Sequence[SweepRecord]) -> LimitReport:
    ul, ur = setup.left.u, setup.right.u
    if not ul > ur:
        raise InvalidInputError("the concentration limit needs u_- > u_+")
    target_a = 0.25 * (ul - ur) ** 2
    target_speed = 0.5 * (ul + ur)
    target_mass = 0.5 * (setup.left.rho + setup.right.rho) * (ul - ur)
    rep = LimitReport(target_a, target_speed, target_mass)
    for rec in sweep:
        if rec.error is not None:
            continue
        rep.gammas.append(rec.gamma)
        rep.err_a.append(abs(rec.a_gamma - target_a))
        rep.err_s1.append(abs(rec.s1 - target_speed))
        rep.err_s2.append(abs(rec.s2 - target_speed))
        rep.err_mass_rate.append(abs(rec.mass_rate - target_mass))
    return rep


# -- thresholds ---------------------------------------------------------------------

def _first_failure(holds: Callable[[float], bool], n_scan: int = 4000) -> float:
    """Supremum of gamma in (1, 2] such that ``holds`` is true on all of (1, gamma).

    A uniform scan locates the first failing grid point; bisection refines the
    crossing between it and the last passing point (or 1).
    """
    prev = 1.0
    for k in range(1, n_scan + 1):
        g = 1.0 + k / n_scan
        if not holds(min(g, 2.0 - 1e-15)):
            lo, hi = prev, g
            for _ in range(200):
                mid = 0.5 * (lo + hi)
                if mid <= lo or mid >= hi:
                    break
                if holds(mid):
                    lo = mid
                else:
                    hi = mid
            return lo
        prev = g
    return 2.0


def region4_lhs(gamma: float, rho_l: float, rho_r: float) -> float:
    """``sqrt(theta (rho_+^(g-1) - rho_-^(g-1)) / (rho_+^2 - rho_-^2))``."""
    th = 0.5 * (gamma - 1.0)
    num = th * (rho_r ** (gamma - 1.0) - rho_l ** (gamma - 1.0))
    return math.sqrt(num / (rho_r * rho_r - rho_l * rho_l))


def gamma_threshold_region4(setup: RiemannSetup) -> float:
    """Largest gamma-bar such that the two-shock condition holds on (1, gamma-bar)."""
    rl, rr = setup.left.rho, setup.right.rho
    du = setup.left.u - setup.right.u
    if not du > 0.0:
        raise InvalidInputError("the two-shock threshold needs u_- > u_+")
    if rl == rr:
        return 2.0
    rhs = du / abs(rr - rl)
    return _first_failure(lambda g: region4_lhs(g, rl, rr) < rhs)


def region1_holds(gamma: float, rho_l: float, rho_r: float, du: float) -> bool:
    th = 0.5 * (gamma - 1.0)
    a, b = rho_l ** th, rho_r ** th
    return abs(a - b) < du < a + b


def gamma_threshold_region1(setup: RiemannSetup) -> float:
    """Largest gamma-bar such that the two-rarefaction condition holds on (1, gamma-bar)."""
    rl, rr = setup.left.rho, setup.right.rho
    du = setup.right.u - setup.left.u
    if not 0.0 < du < 2.0:
        raise InvalidInputError("the two-rarefaction threshold needs u_- < u_+ < u_- + 2")
    return _first_failure(lambda g: region1_holds(g, rl, rr, du))


# -- cavitation -----------------------------------------------------------------------

@dataclass(frozen=True)
class VacuumReport:
    u_left: float
    u_right: float
    gammas: list[float] = field(default_factory=list)
    rho_star_log10: list[float] = field(default_factory=list)
    outer_left: list[float] = field(default_factory=list)
    outer_right: list[float] = field(default_factory=list)
    inner_left: list[float] = field(default_factory=list)
    inner_right: list[float] = field(default_factory=list)
    interior_max_rho: list[float] = field(default_factory=list)

    @property
    def monotone(self) -> bool:
        return (_strictly_decreasing(self.rho_star_log10)
                and _strictly_decreasing(self.interior_max_rho))


def vacuum_limit_report(setup: RiemannSetup, sweep: Sequence[SweepRecord],
                        eps: float = 0.1, n_samples: int = 201) -> VacuumReport:
    """Per-gamma cavitation diagnostics for data with ``u_- < u_+ < u_- + 2``.

    The interior density is sampled on ``xi`` in ``[u_- + eps, u_+ - eps]``.
    """
    ul, ur = setup.left.u, setup.right.u
    if not ul < ur < ul + 2.0:
        raise InvalidInputError("the cavitation limit needs u_- < u_+ < u_- + 2")
    if not ul + eps < ur - eps:
        raise InvalidInputError("eps leaves an empty interior interval")
    xis = np.linspace(ul + eps, ur - eps, n_samples)
    rep = VacuumReport(ul, ur)
    for rec in sweep:
        if rec.error is not None:
            continue
        fan = build_wave_fan(setup.with_gamma(rec.gamma))
        first, last = fan.waves[0], fan.waves[-1]
        rep.gammas.append(rec.gamma)
        rep.rho_star_log10.append(rec.rho_star_log10)
        rep.outer_left.append(first.xi_left)
        rep.outer_right.append(last.xi_right)
        rep.inner_left.append(rec.s1)
        rep.inner_right.append(rec.s2)
        rep.interior_max_rho.append(max(sample_shifted(fan, float(x))[0] for x in xis))
    return rep
