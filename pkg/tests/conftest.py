import numpy as np
import pytest
from hypothesis import strategies as st

from riemann_limits.core import RiemannSetup

# two-shock and two-rarefaction data used throughout
TWO_SHOCK = dict(rho_l=1.5, u_l=2.0, rho_r=2.0, u_r=-1.0)
TWO_RAREFACTION = dict(rho_l=1.0, u_l=-0.1, rho_r=4.0, u_r=1.0)


def make_setup(data, gamma=None, beta=0.0):
    return RiemannSetup.from_values(data["rho_l"], data["u_l"], data["rho_r"], data["u_r"],
                                    gamma, beta)


def random_setup(rng, gamma=(1.01, 1.99), beta=(-5.0, 5.0)):
    return RiemannSetup.from_values(rng.uniform(0.1, 10.0), rng.uniform(-5.0, 5.0),
                                    rng.uniform(0.1, 10.0), rng.uniform(-5.0, 5.0),
                                    rng.uniform(*gamma), rng.uniform(*beta))


densities = st.floats(0.1, 10.0)
velocities = st.floats(-5.0, 5.0)
gammas = st.floats(1.01, 1.99)
betas = st.floats(-5.0, 5.0)


@st.composite
def setups(draw, gamma=gammas):
    return RiemannSetup.from_values(draw(densities), draw(velocities), draw(densities),
                                    draw(velocities), draw(gamma), draw(betas))


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)
