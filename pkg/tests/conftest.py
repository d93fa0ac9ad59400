import random

import pytest

from hklattice.h4_model import default_h4_lattice, default_torsion_quotient


@pytest.fixture(scope="session")
def h4():
    return default_h4_lattice()


@pytest.fixture(scope="session")
def tq():
    return default_torsion_quotient()


@pytest.fixture()
def rng():
    # one fixed stream per test keeps failures reproducible
    return random.Random(20260819)
