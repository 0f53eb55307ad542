"""
Rough initial data.

u₀ = Σ_ξ (1 + |ξ|)^{-1/2 - s - ε} (1 + i) e^{iξ·x}, truncated to the grid's
frequency set. In d = 2 this is the fixed deterministic series used for the
temporal convergence experiment; on the torus it lies in H^s (ε > 0) and the
truncation is its finite-grid analogue.
"""

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from ..spectral import Field as SpectralField
from ..spectral import Grid


class RoughDataSpec(BaseModel):
    """
    Attributes:
        grid: Target grid (d=2 for the experiment, any d supported)
        s: Regularity exponent of the data
        epsilon: Extra decay ε >= 0 (the experiment uses 0)
    """

    model_config = ConfigDict(frozen=True)

    grid: Grid
    s: float = Field(ge=0.0, description="Regularity exponent")
    epsilon: float = Field(default=0.0, ge=0.0, description="Extra decay")


def rough_initial_data(spec: RoughDataSpec) -> SpectralField:
    """Spectral Field with coefficients (1+|ξ|)^{-1/2-s-ε}(1+i)."""
    k = np.sqrt(spec.grid.squared_frequencies())
    coeffs = (1.0 + k) ** (-0.5 - spec.s - spec.epsilon) * (1 + 1j)
    return SpectralField.from_spectral(spec.grid, coeffs)
