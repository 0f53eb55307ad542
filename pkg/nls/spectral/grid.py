"""
Torus discretization.

A Grid describes the collocation grid on the d-dimensional torus (0, 2π)^d
with N points per axis and the matching set of integer wavenumbers
{-N/2, ..., N/2-1} per axis, stored in FFT order.
"""

import math
from functools import lru_cache

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator


@lru_cache(maxsize=None)
def _axis_frequencies(n: int) -> np.ndarray:
    # fftfreq(n, 1/n) yields [0, 1, ..., n/2-1, -n/2, ..., -1]
    freqs = np.rint(np.fft.fftfreq(n, d=1.0 / n)).astype(np.int64)
    freqs.setflags(write=False)
    return freqs


@lru_cache(maxsize=None)
def _wavevectors(dim: int, n: int) -> np.ndarray:
    axes = np.meshgrid(*([_axis_frequencies(n)] * dim), indexing="ij")
    stacked = np.stack(axes)
    stacked.setflags(write=False)
    return stacked


@lru_cache(maxsize=None)
def _squared_frequencies(dim: int, n: int) -> np.ndarray:
    xi = _wavevectors(dim, n)
    k2 = np.sum(xi * xi, axis=0).astype(np.float64)
    k2.setflags(write=False)
    return k2


class Grid(BaseModel):
    """
    Immutable description of an N^d collocation grid on the torus.

    Attributes:
        dim: Space dimension d (>= 1)
        n_per_axis: Points per axis N (even, >= 2), identical on every axis

    Example:
        >>> grid = make_grid(2, 128)
        >>> grid.total_points
        16384
    """

    model_config = ConfigDict(frozen=True)

    dim: int = Field(ge=1, description="Space dimension d")
    n_per_axis: int = Field(ge=2, description="Grid points per axis N")

    @field_validator("n_per_axis")
    @classmethod
    def validate_even(cls, v: int) -> int:
        if v % 2 != 0:
            raise ValueError(f"Points per axis must be even, got {v}")
        return v

    @property
    def spacing(self) -> float:
        return 2 * math.pi / self.n_per_axis

    @property
    def total_points(self) -> int:
        return self.n_per_axis**self.dim

    @property
    def shape(self) -> tuple[int, ...]:
        return (self.n_per_axis,) * self.dim

    def frequencies(self) -> np.ndarray:
        """Integer wavenumbers of one axis in storage order."""
        return _axis_frequencies(self.n_per_axis)

    def wavevectors(self) -> np.ndarray:
        """Integer frequency vectors, shape (d, N, ..., N), indexing 'ij'."""
        return _wavevectors(self.dim, self.n_per_axis)

    def squared_frequencies(self) -> np.ndarray:
        """|ξ|² at every storage index, as float64."""
        return _squared_frequencies(self.dim, self.n_per_axis)

    def nodes(self) -> tuple[np.ndarray, ...]:
        """Physical coordinates x_j = 2πj/N, one broadcastable array per axis."""
        x = self.spacing * np.arange(self.n_per_axis)
        return tuple(np.meshgrid(*([x] * self.dim), indexing="ij"))

    def index_of(self, xi) -> tuple[int, ...]:
        """Storage index of the frequency vector xi."""
        xi = tuple(int(k) for k in np.atleast_1d(xi))
        if len(xi) != self.dim:
            raise ValueError(f"Expected a {self.dim}-dimensional frequency, got {xi}")
        half = self.n_per_axis // 2
        for k in xi:
            if not -half <= k < half:
                raise ValueError(
                    f"Frequency {k} outside the grid range [{-half}, {half - 1}]"
                )
        return tuple(k % self.n_per_axis for k in xi)


def make_grid(d: int, n: int) -> Grid:
    """
    Build the grid with n points per axis on the d-dimensional torus.

    Raises:
        ValueError: If d < 1 or n is not a positive even integer
    """
    if d < 1:
        raise ValueError(f"Dimension must be at least 1, got {d}")
    if n < 2 or n % 2 != 0:
        raise ValueError(f"Points per axis must be a positive even integer, got {n}")
    return Grid(dim=d, n_per_axis=n)
