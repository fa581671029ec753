import numpy as np
import pytest
from hypothesis import settings

from ergoengine.core import boltzmann
from ergoengine.model import spectrum_energies

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile("default")

# Boltzmann populations for E = (-6, -4, 2, 8), beta = 1, evaluated with mpmath at 30 digits
THERMAL_B3_J1_BETA1 = np.array(
    [0.88053625705360321, 0.11916762374845619, 0.00029538700675464341, 7.3219118595203267e-7]
)


@pytest.fixture
def thermal_p():
    return THERMAL_B3_J1_BETA1.copy()


def thermal(B, J, beta):
    return boltzmann(spectrum_energies(B, J), beta)


@pytest.fixture
def rng():
    return np.random.default_rng(20261015)
