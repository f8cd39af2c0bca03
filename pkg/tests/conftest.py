import pytest

import packlab as pl


@pytest.fixture(scope="session")
def apollonian_seed():
    return pl.packing_seed("apollonian2")


@pytest.fixture(scope="session")
def deep_apollonian_orbit(apollonian_seed):
    """The curvature-1e5 enumeration reused by the exponent and acceptance tests."""
    return pl.enumerate_packing(apollonian_seed, bound=10**5)
