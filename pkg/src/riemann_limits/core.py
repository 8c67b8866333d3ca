"""Domain types and the velocity shift that removes the friction source.

The friction system ``rho_t + (rho u)_x = 0, u_t + (u^2/2 + p)_x = beta`` becomes
conservative in ``(rho, v)`` with ``v = u - beta t``.  All solvers work with
shifted states and convert back to physical velocity at the very end.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field


class InvalidInputError(ValueError):
    """Raised for data outside the admissible range (bad gamma, rho <= 0, ...)."""


class SolverError(RuntimeError):
    """Raised when a root solve or a simulation cannot be completed."""


@dataclass(frozen=True)
class Gamma:
    """Adiabatic exponent restricted to the open interval (1, 2)."""

    value: float

    def __post_init__(self):
        v = float(self.value)
        if not (1.0 < v < 2.0) or not math.isfinite(v):
            raise InvalidInputError(f"gamma must lie in (1, 2), got {self.value!r}")
        object.__setattr__(self, "value", v)

    @property
    def theta(self) -> float:
        """Exponent ``(gamma - 1) / 2`` shared by the sound speed and invariants."""
        return 0.5 * (self.value - 1.0)

    def __float__(self) -> float:
        return self.value


def as_gamma(gamma: Gamma | float) -> Gamma:
    return gamma if isinstance(gamma, Gamma) else Gamma(gamma)


@dataclass(frozen=True)
class FluidState:
    """Physical state ``(rho, u)``.

    ``rho == 0`` is vacuum.  The velocity there is either a ray value supplied by
    the caller or ``nan`` when it is undefined.
    """

    rho: float
    u: float

    def __post_init__(self):
        if not self.rho >= 0.0:
            raise InvalidInputError(f"density must be >= 0, got {self.rho!r}")

    @property
    def is_vacuum(self) -> bool:
        return self.rho == 0.0

    @classmethod
    def vacuum(cls, u: float = math.nan) -> "FluidState":
        return cls(0.0, u)


@dataclass(frozen=True)
class ShiftedState:
    """State ``(rho, v)`` in the shifted velocity ``v = u - beta t``.

    ``log_rho`` may carry the exact natural log of the density for states whose
    density over- or underflows double range; ``ln_rho`` prefers it.
    """

    rho: float
    v: float
    log_rho: float | None = field(default=None, compare=False)

    def __post_init__(self):
        if not self.rho >= 0.0:
            raise InvalidInputError(f"density must be >= 0, got {self.rho!r}")

    @property
    def ln_rho(self) -> float:
        if self.log_rho is not None:
            return self.log_rho
        return math.log(self.rho) if self.rho > 0.0 else -math.inf

    @classmethod
    def from_log(cls, log_rho: float, v: float) -> "ShiftedState":
        return cls(_exp(log_rho), v, log_rho)


def _exp(x: float) -> float:
    if x > 709.78:
        return math.inf
    return math.exp(x)


class Region(enum.Enum):
    """Position of the right state relative to the wave curves of the left state.

    I: two rarefactions, II: 1-shock + 2-rarefaction, III: 1-rarefaction + 2-shock,
    IV: two shocks, V: two rarefactions separated by vacuum.
    """

    I = "I"
    II = "II"
    III = "III"
    IV = "IV"
    V = "V"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class RiemannSetup:
    """Riemann data: left/right states, exponent and friction constant.

    ``gamma`` may be ``None`` for the pressureless system, which ignores it.
    """

    left: FluidState
    right: FluidState
    gamma: Gamma | None = None
    beta: float = 0.0

    def __post_init__(self):
        for side, st in (("left", self.left), ("right", self.right)):
            if not (st.rho > 0.0 and math.isfinite(st.rho)):
                raise InvalidInputError(f"{side} density must be positive and finite")
            if not math.isfinite(st.u):
                raise InvalidInputError(f"{side} velocity must be finite")
        if not math.isfinite(self.beta):
            raise InvalidInputError("beta must be finite")
        if self.gamma is not None and not isinstance(self.gamma, Gamma):
            object.__setattr__(self, "gamma", Gamma(self.gamma))
        object.__setattr__(self, "beta", float(self.beta))

    @classmethod
    def from_values(cls, rho_l, u_l, rho_r, u_r, gamma=None, beta=0.0) -> "RiemannSetup":
        return cls(FluidState(float(rho_l), float(u_l)), FluidState(float(rho_r), float(u_r)),
                   gamma, beta)

    def require_gamma(self) -> Gamma:
        if self.gamma is None:
            raise InvalidInputError("this operation needs an adiabatic exponent")
        return self.gamma

    def with_gamma(self, gamma: Gamma | float) -> "RiemannSetup":
        return RiemannSetup(self.left, self.right, as_gamma(gamma), self.beta)

    def with_beta(self, beta: float) -> "RiemannSetup":
        return RiemannSetup(self.left, self.right, self.gamma, beta)


def shift_to_v(state: FluidState, t: float, beta: float) -> ShiftedState:
    """Physical ``(rho, u)`` to shifted ``(rho, u - beta t)``."""
    return ShiftedState(state.rho, state.u - beta * t)


def shift_to_u(state: ShiftedState, t: float, beta: float) -> FluidState:
    """Inverse of :func:`shift_to_v`."""
    return FluidState(state.rho, state.v + beta * t)
