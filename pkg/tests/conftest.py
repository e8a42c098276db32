import numpy as np
import pytest

from mmsep.riesz import riesz_potential
from mmsep.spaces import gen_grid, gen_path


@pytest.fixture(scope="session")
def path5():
    return gen_path(5)


@pytest.fixture(scope="session")
def path5_field(path5):
    # Canonical pole pair with the truncation ball covering the whole path.
    return riesz_potential(path5, "v0", "v4", 1.0)


@pytest.fixture(scope="session")
def grid3():
    return gen_grid(3)


@pytest.fixture(scope="session")
def grid16():
    return gen_grid(16)


@pytest.fixture(scope="session", autouse=True)
def _warm_kernels():
    # First jitted call pays compile time; keep it out of timed tests.
    g = gen_path(4)
    g.distance_field(0)
    from mmsep.energies import min_cut_energy
    min_cut_energy(g, "v0", "v3", L=2.0)
