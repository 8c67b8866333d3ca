"""Riemann problems for isentropic gas dynamics with a constant momentum source.

The package provides an exact Riemann solver for ``1 < gamma < 2``, the
pressureless solver reached as ``gamma -> 1``, diagnostics for the
concentration and cavitation limits, and a WENO5 simulator.
"""

from .core import (
    FluidState,
    Gamma,
    InvalidInputError,
    Region,
    RiemannSetup,
    ShiftedState,
    SolverError,
    shift_to_u,
    shift_to_v,
)
from .exact import (
    WaveDescriptor,
    WaveFan,
    build_wave_fan,
    discontinuities,
    evaluate_exact,
    rankine_hugoniot_residual,
    sample_arrays,
    sample_profile,
    sample_shifted,
)
from .io import ErrorMetrics, ProfileRow, compare_profiles, read_profile, write_profile
from .limits import (
    LimitReport,
    SweepRecord,
    VacuumReport,
    delta_limit_report,
    gamma_threshold_region1,
    gamma_threshold_region4,
    sweep_gamma,
    vacuum_limit_report,
)
from .pressureless import (
    DeltaMarker,
    DeltaShock,
    PressurelessKind,
    PressurelessSolution,
    entropy_satisfied,
    evaluate_pressureless,
    generalized_rh_residual,
    solve_pressureless,
)
from .wave_curves import (
    IntermediateState,
    VacuumRegionError,
    WaveKind,
    backward_curve_2,
    characteristic_speeds,
    classify_region,
    forward_curve_1,
    lax_satisfied,
    phi,
    pressure,
    riemann_invariants,
    shock_speed,
    solve_intermediate,
)

__version__ = "0.1.0"
