import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from riemann_limits.core import (FluidState, Gamma, InvalidInputError, RiemannSetup, ShiftedState,
                                 shift_to_u, shift_to_v)


@pytest.mark.parametrize("g", [1.0, 2.0, 0.5, 2.5, math.nan, math.inf])
def test_gamma_rejects_out_of_range(g):
    with pytest.raises(InvalidInputError):
        Gamma(g)


def test_gamma_theta():
    assert Gamma(1.5).theta == 0.25
    assert float(Gamma(1.8)) == 1.8


def test_fluid_state_rejects_negative_density():
    with pytest.raises(InvalidInputError):
        FluidState(-1e-3, 0.0)


def test_vacuum_state():
    v = FluidState.vacuum()
    assert v.is_vacuum and v.rho == 0.0 and math.isnan(v.u)
    assert not FluidState(1.0, 0.0).is_vacuum


def test_shifted_state_log_density():
    s = ShiftedState.from_log(800.0, 0.5)
    assert s.ln_rho == 800.0
    assert s.rho == math.inf
    assert ShiftedState(0.0, 1.0).ln_rho == -math.inf


@pytest.mark.parametrize("rho", [0.0, -1.0, math.inf, math.nan])
def test_setup_requires_positive_finite_density(rho):
    with pytest.raises(InvalidInputError):
        RiemannSetup.from_values(rho, 0.0, 1.0, 0.0, 1.5)


def test_setup_rejects_nonfinite_velocity_and_beta():
    with pytest.raises(InvalidInputError):
        RiemannSetup.from_values(1.0, math.nan, 1.0, 0.0, 1.5)
    with pytest.raises(InvalidInputError):
        RiemannSetup.from_values(1.0, 0.0, 1.0, 0.0, 1.5, math.inf)


def test_setup_gamma_handling():
    s = RiemannSetup.from_values(1.0, 0.0, 2.0, 0.0)
    with pytest.raises(InvalidInputError):
        s.require_gamma()
    assert s.with_gamma(1.5).gamma == Gamma(1.5)
    with pytest.raises(InvalidInputError):
        s.with_gamma(2.5)
    assert s.with_beta(3.0).beta == 3.0


def test_shift_examples():
    assert shift_to_v(FluidState(1.0, 0.0), 0.0, 2.0) == ShiftedState(1.0, 0.0)
    s = shift_to_v(FluidState(1.0, 0.9), 0.2, 2.0)
    assert s.rho == 1.0 and s.v == pytest.approx(0.5, abs=1e-15)


def test_shift_round_trip_random(rng):
    for _ in range(100):
        f = FluidState(rng.uniform(0, 10), rng.uniform(-5, 5))
        t, beta = rng.uniform(0, 2), rng.uniform(-5, 5)
        back = shift_to_u(shift_to_v(f, t, beta), t, beta)
        assert back.rho == f.rho
        assert back.u == pytest.approx(f.u, rel=0, abs=4 * np.spacing(max(abs(f.u), beta * t)))


@given(st.floats(0, 1e3), st.floats(-1e3, 1e3), st.floats(0, 10), st.floats(-10, 10))
def test_shift_round_trip_property(rho, u, t, beta):
    back = shift_to_u(shift_to_v(FluidState(rho, u), t, beta), t, beta)
    # one rounding in each direction
    assert abs(back.u - u) <= 2 * np.spacing(max(abs(u), abs(beta * t), 1e-300))
