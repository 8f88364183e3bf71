import numpy as np
import pytest

from mrspec import PotentialParams
from mrspec.cli import load_golden_rows


@pytest.fixture(scope="session")
def pp_deep():
    """Potential of the alpha = 1 golden table (A = 2b, 1/b = 0.025)."""
    return PotentialParams(a_strength=80.0, alpha=1.0, b=40.0)


@pytest.fixture(scope="session")
def pp_deep_075():
    """Potential of the alpha = 0.75 golden table."""
    return PotentialParams(a_strength=80.0, alpha=0.75, b=40.0)


@pytest.fixture(scope="session")
def golden_075():
    return load_golden_rows(alpha=0.75)


@pytest.fixture(scope="session")
def golden_100():
    return load_golden_rows(alpha=1.0)


@pytest.fixture(scope="session")
def gauss_legendre_512():
    return np.polynomial.legendre.leggauss(512)
