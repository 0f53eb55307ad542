"""
Complex fields on a torus grid.

A Field stores its values in exactly one representation, physical samples
or Fourier coefficients, and converts on request.
"""

from enum import Enum

import numpy as np
from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from . import transforms
from .grid import Grid


class Representation(str, Enum):
    PHYSICAL = "physical"
    SPECTRAL = "spectral"


class Field(BaseModel):
    """
    Complex double-precision values on a Grid.

    Attributes:
        grid: The grid the values live on
        representation: Whether values are physical samples or Fourier coefficients
        values: complex128 array of shape (N,)*d, row-major

    Example:
        >>> grid = make_grid(1, 4)
        >>> f = Field.from_physical(grid, np.ones(4))
        >>> f.to_spectral().coefficient(0)
        (1+0j)
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    grid: Grid
    representation: Representation
    values: np.ndarray

    @field_validator("values", mode="before")
    @classmethod
    def coerce_values(cls, v) -> np.ndarray:
        return np.ascontiguousarray(v, dtype=np.complex128)

    @model_validator(mode="after")
    def check_shape(self) -> "Field":
        if self.values.shape != self.grid.shape:
            if self.values.size == self.grid.total_points:
                object.__setattr__(self, "values", self.values.reshape(self.grid.shape))
            else:
                raise ValueError(
                    f"Field shape {self.values.shape} does not match grid shape {self.grid.shape}"
                )
        return self

    @classmethod
    def from_physical(cls, grid: Grid, values) -> "Field":
        return cls(grid=grid, representation=Representation.PHYSICAL, values=values)

    @classmethod
    def from_spectral(cls, grid: Grid, values) -> "Field":
        return cls(grid=grid, representation=Representation.SPECTRAL, values=values)

    @classmethod
    def zeros(
        cls, grid: Grid, representation: Representation = Representation.PHYSICAL
    ) -> "Field":
        return cls(
            grid=grid,
            representation=representation,
            values=np.zeros(grid.shape, dtype=np.complex128),
        )

    @property
    def is_physical(self) -> bool:
        return self.representation is Representation.PHYSICAL

    @property
    def flat(self) -> np.ndarray:
        """Values flattened in row-major axis order."""
        return self.values.ravel()

    def with_values(self, values) -> "Field":
        """Same grid and representation, new values."""
        return Field(grid=self.grid, representation=self.representation, values=values)

    def to_spectral(self) -> "Field":
        if not self.is_physical:
            return self
        return Field.from_spectral(self.grid, transforms.forward(self.values))

    def to_physical(self) -> "Field":
        if self.is_physical:
            return self
        return Field.from_physical(self.grid, transforms.inverse(self.values))

    def to(self, representation: Representation | str) -> "Field":
        representation = Representation(representation)
        if representation is Representation.PHYSICAL:
            return self.to_physical()
        return self.to_spectral()

    def conj(self) -> "Field":
        """Pointwise complex conjugate in physical space."""
        return Field.from_physical(self.grid, np.conj(self.to_physical().values))

    def coefficient(self, xi) -> complex:
        """Fourier coefficient at the integer frequency vector xi."""
        return complex(self.to_spectral().values[self.grid.index_of(xi)])

    def is_finite(self) -> bool:
        return bool(np.all(np.isfinite(self.values)))
