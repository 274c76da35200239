import numpy as np
import pytest

from branchpoint_lab import CantorSet, SeriesParams


@pytest.fixture(scope="session")
def cs_half():
    return CantorSet.build(0.5, 12)


@pytest.fixture(scope="session")
def params_half():
    return SeriesParams(s=0.5, max_gen=12)


@pytest.fixture(scope="session")
def probe_grid():
    """Deterministic probes in the open right half-plane, away from the set."""
    rng = np.random.default_rng(20240817)
    re = rng.uniform(0.05, 1.5, 64)
    im = rng.uniform(-1.2, 1.2, 64)
    return re + 1j * im
