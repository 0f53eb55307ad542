"""
Discrete Sobolev norms.

L²_N is the trapezoidal L² norm ((2π)^d / N^d) Σ |w(x_j)|², which by
Plancherel equals (2π)^d Σ |ŵ(ξ)|² with the forward-normalized coefficients.
"""

import math
from enum import Enum

import numpy as np

from .field import Field


class SobolevWeight(str, Enum):
    BESSEL = "bessel"  # (1 + |ξ|²)^{γ/2}
    LINEAR = "linear"  # (1 + |ξ|)^γ


def sobolev_weight(k2: np.ndarray, gamma: float, weight: SobolevWeight | str) -> np.ndarray:
    """Weight w(ξ) evaluated on |ξ|²."""
    weight = SobolevWeight(weight)
    if weight is SobolevWeight.BESSEL:
        return (1.0 + k2) ** (gamma / 2)
    return (1.0 + np.sqrt(k2)) ** gamma


def l2_norm(f: Field) -> float:
    """L²_N norm computed from physical samples."""
    values = f.to_physical().values
    scale = (2 * math.pi) ** f.grid.dim / f.grid.total_points
    return math.sqrt(scale * float(np.sum(np.abs(values) ** 2)))


def hgamma_norm(
    f: Field, gamma: float, weight: SobolevWeight | str = SobolevWeight.LINEAR
) -> float:
    """
    Discrete H^γ norm (2π)^{d/2} (Σ_ξ w(ξ)² |f̂(ξ)|²)^{1/2}.

    Args:
        f: Field in either representation
        gamma: Sobolev index, must be >= 0
        weight: "linear" for (1+|ξ|)^γ (experiment norm) or "bessel" for (1+|ξ|²)^{γ/2}

    Raises:
        ValueError: If gamma < 0
    """
    if gamma < 0:
        raise ValueError(f"Sobolev index must be non-negative, got {gamma}")
    coeffs = f.to_spectral().values
    w = sobolev_weight(f.grid.squared_frequencies(), gamma, weight)
    total = float(np.sum((w * np.abs(coeffs)) ** 2))
    return (2 * math.pi) ** (f.grid.dim / 2) * math.sqrt(total)
