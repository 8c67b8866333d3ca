"""Riemann solutions of the pressureless friction system.

Three structures occur: a delta shock when ``u_- > u_+``, two contacts
enclosing a vacuum when ``u_- < u_+``, and a single contact otherwise.  The
delta shock is kept as path, weight and speed; it is never sampled into the
density.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .core import FluidState, InvalidInputError, RiemannSetup

POSITION_TOL = 1e-12


class PressurelessKind(enum.Enum):
    DELTA_SHOCK = "delta-shock"
    VACUUM = "vacuum"
    CONTACT = "contact"


@dataclass(frozen=True)
class DeltaShock:
    v_delta: float
    beta: float
    weight_rate: float

    def position(self, t: float) -> float:
        return self.v_delta * t + 0.5 * self.beta * t * t

    def weight(self, t: float) -> float:
        return self.weight_rate * t

    def speed(self, t: float) -> float:
        return self.v_delta + self.beta * t


@dataclass(frozen=True)
class DeltaMarker:
    """Returned by point evaluation on the delta-shock path."""

    weight: float
    u_delta: float


@dataclass(frozen=True)
class PressurelessSolution:
    kind: PressurelessKind
    setup: RiemannSetup
    delta: DeltaShock | None = None
    # shifted speeds of the contacts: (left, right) for vacuum, (c, c) for a contact
    contact_speeds: tuple[float, float] | None = None

    def contact_positions(self, t: float) -> tuple[float, float]:
        shift = 0.5 * self.setup.beta * t * t
        a, b = self.contact_speeds
        return a * t + shift, b * t + shift


def solve_pressureless(setup: RiemannSetup) -> PressurelessSolution:
    ul, ur = setup.left.u, setup.right.u
    if ul > ur:
        ds = DeltaShock(
            v_delta=0.5 * (ul + ur),
            beta=setup.beta,
            weight_rate=0.5 * (setup.left.rho + setup.right.rho) * (ul - ur),
        )
        return PressurelessSolution(PressurelessKind.DELTA_SHOCK, setup, delta=ds)
    if ul < ur:
        return PressurelessSolution(PressurelessKind.VACUUM, setup, contact_speeds=(ul, ur))
    return PressurelessSolution(PressurelessKind.CONTACT, setup, contact_speeds=(ul, ul))


def evaluate_pressureless(sol: PressurelessSolution, t: float, x: float,
                          tol: float = POSITION_TOL) -> FluidState | DeltaMarker:
    """Point value at ``(t, x)``.

    On the delta path (within ``tol * (1 + |x|)``) a :class:`DeltaMarker` is
    returned; inside the vacuum the density is 0 and the velocity ``nan``.
    """
    if not t > 0.0:
        raise InvalidInputError("the solution is sampled at t > 0 only")
    st = sol.setup
    left = FluidState(st.left.rho, st.left.u + st.beta * t)
    right = FluidState(st.right.rho, st.right.u + st.beta * t)
    if sol.kind is PressurelessKind.DELTA_SHOCK:
        xd = sol.delta.position(t)
        if abs(x - xd) <= tol * (1.0 + abs(x)):
            return DeltaMarker(sol.delta.weight(t), sol.delta.speed(t))
        return left if x < xd else right
    xa, xb = sol.contact_positions(t)
    if x < xa:
        return left
    if sol.kind is PressurelessKind.VACUUM and x <= xb:
        return FluidState.vacuum()
    return right


def generalized_rh_residual(ds: DeltaShock, setup: RiemannSetup,
                            t: float) -> tuple[float, float, float]:
    """Residuals of the generalized jump conditions for the delta shock.

    ``dx/dt = u_delta``, ``dw/dt = u_delta [rho] - [rho (v + beta t)]`` and
    ``u_delta [v] = [(v + beta t)^2 / 2]``, all evaluated from the stored
    coefficients.
    """
    bt = setup.beta * t
    rl, rr = setup.left.rho, setup.right.rho
    vl, vr = setup.left.u, setup.right.u
    u_d = ds.speed(t)
    dxdt = ds.v_delta + ds.beta * t
    r1 = dxdt - u_d
    r2 = ds.weight_rate - (u_d * (rr - rl) - (rr * (vr + bt) - rl * (vl + bt)))
    r3 = u_d * (vr - vl) - 0.5 * ((vr + bt) ** 2 - (vl + bt) ** 2)
    return r1, r2, r3


def entropy_satisfied(ds: DeltaShock, setup: RiemannSetup, t: float) -> bool:
    """Strict ``u_+ + beta t < u_delta(t) < u_- + beta t``."""
    bt = setup.beta * t
    return setup.right.u + bt < ds.speed(t) < setup.left.u + bt


def interfaces(sol: PressurelessSolution, t: float) -> list[float]:
    """Positions of the delta path or contacts at time ``t``."""
    if sol.kind is PressurelessKind.DELTA_SHOCK:
        return [sol.delta.position(t)]
    a, b = sol.contact_positions(t)
    return [a] if sol.kind is PressurelessKind.CONTACT else [a, b]
