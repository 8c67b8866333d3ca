"""WENO5 finite-difference simulator; the right-hand side kernel is compiled when available."""

from ._backend import BACKEND
from .sim import (
    GridField,
    SimConfig,
    SimulationError,
    Snapshot,
    initial_field,
    semi_discrete_rhs,
    simulate,
    ssp_rk3_step,
    stable_dt,
    total_mass,
    weno5_reconstruct,
)

__all__ = [
    "BACKEND",
    "GridField",
    "SimConfig",
    "SimulationError",
    "Snapshot",
    "initial_field",
    "semi_discrete_rhs",
    "simulate",
    "ssp_rk3_step",
    "stable_dt",
    "total_mass",
    "weno5_reconstruct",
]
