import numpy as np
import pytest

from nls.spectral import Field, make_grid


@pytest.fixture
def rng():
    return np.random.default_rng(1234)


@pytest.fixture
def grid_1d():
    return make_grid(1, 32)


@pytest.fixture
def grid_2d():
    return make_grid(2, 16)


def random_smooth_field(grid, rng, decay: float = 3.0) -> Field:
    """Random spectral data with algebraically decaying coefficients."""
    k = np.sqrt(grid.squared_frequencies())
    coeffs = rng.standard_normal(grid.shape) + 1j * rng.standard_normal(grid.shape)
    return Field.from_spectral(grid, coeffs * (1.0 + k) ** -decay).to_physical()


@pytest.fixture
def smooth_field(grid_2d, rng):
    return random_smooth_field(grid_2d, rng)
