import numpy as np
import pytest

from photonloc import build_mode_pair, forward_transform, tri2_seed

R0 = 1.0
K0 = 4.0 * np.pi


@pytest.fixture(scope="session")
def tri2():
    return tri2_seed(R0, K0)


@pytest.fixture(scope="session")
def tri2_spec(tri2):
    return forward_transform(tri2)


@pytest.fixture(scope="session")
def tri2_pair(tri2):
    return build_mode_pair(tri2)
