"""Grids, fields, Fourier transforms, multipliers and Sobolev norms."""

from .field import Field, Representation
from .grid import Grid, make_grid
from .multipliers import (
    MultiplierSymbol,
    apply_multiplier,
    frequency_squared_symbol,
    laplacian_symbol,
)
from .norms import SobolevWeight, hgamma_norm, l2_norm
from .snapshot import read_snapshot, write_snapshot


def to_spectral(f: Field) -> Field:
    return f.to_spectral()


def to_physical(f: Field) -> Field:
    return f.to_physical()


__all__ = [
    "Field",
    "Grid",
    "MultiplierSymbol",
    "Representation",
    "SobolevWeight",
    "apply_multiplier",
    "frequency_squared_symbol",
    "hgamma_norm",
    "l2_norm",
    "laplacian_symbol",
    "make_grid",
    "read_snapshot",
    "to_physical",
    "to_spectral",
    "write_snapshot",
]
