"""
Diagonal Fourier multipliers.

A MultiplierSymbol maps integer frequency vectors to complex numbers and
acts on a Field by multiplying each Fourier coefficient. Functions of the
Laplacian (propagators, phi-functions) are radial symbols: they depend on
|ξ|² only.
"""

from collections.abc import Callable

import numpy as np

from .field import Field, Representation
from .grid import Grid

# evaluator(xi) with xi of shape (d, ...) returns an array of shape (...)
Evaluator = Callable[[np.ndarray], np.ndarray]


class MultiplierSymbol:
    """Complex symbol m(ξ) with a per-grid table cache."""

    def __init__(self, evaluator: Evaluator, name: str = "symbol"):
        self.evaluator = evaluator
        self.name = name
        self._tables: dict[Grid, np.ndarray] = {}

    @classmethod
    def radial(cls, fn: Callable[[np.ndarray], np.ndarray], name: str = "radial"):
        """Symbol given as a function of |ξ|² (float64)."""

        def evaluator(xi: np.ndarray) -> np.ndarray:
            xi = np.asarray(xi)
            return fn(np.sum(xi * xi, axis=0).astype(np.float64))

        return cls(evaluator, name=name)

    @classmethod
    def constant(cls, value: complex, name: str | None = None):
        def evaluator(xi: np.ndarray) -> np.ndarray:
            return np.full(np.shape(xi)[1:], value, dtype=np.complex128)

        return cls(evaluator, name=name or f"const({value})")

    def __call__(self, xi) -> complex:
        # route a single vector through the array path so it matches table()
        column = np.asarray(xi).reshape(-1, 1)
        return complex(np.asarray(self.evaluator(column), dtype=np.complex128)[0])

    def table(self, grid: Grid) -> np.ndarray:
        """Symbol values at every storage index of the grid."""
        cached = self._tables.get(grid)
        if cached is None:
            cached = np.asarray(self.evaluator(grid.wavevectors()), dtype=np.complex128)
            cached = np.broadcast_to(cached, grid.shape).copy()
            cached.setflags(write=False)
            self._tables[grid] = cached
        return cached

    def __mul__(self, other: "MultiplierSymbol") -> "MultiplierSymbol":
        a, b = self.evaluator, other.evaluator
        return MultiplierSymbol(
            lambda xi: a(xi) * b(xi), name=f"({self.name})*({other.name})"
        )

    def __add__(self, other: "MultiplierSymbol") -> "MultiplierSymbol":
        a, b = self.evaluator, other.evaluator
        return MultiplierSymbol(
            lambda xi: a(xi) + b(xi), name=f"({self.name})+({other.name})"
        )

    def __repr__(self) -> str:
        return f"MultiplierSymbol({self.name})"


def apply_multiplier(
    m: MultiplierSymbol,
    f: Field,
    representation: Representation | str | None = None,
) -> Field:
    """
    Multiply the Fourier coefficients of f by m(ξ).

    Args:
        m: The symbol
        f: Input field in either representation
        representation: Output representation; defaults to the input's

    Returns:
        Field: The transformed field
    """
    target = Representation(representation) if representation else f.representation
    spectral = f.to_spectral()
    out = Field.from_spectral(f.grid, m.table(f.grid) * spectral.values)
    return out.to(target)


def frequency_squared_symbol() -> MultiplierSymbol:
    """Raw |ξ|², the symbol of -Δ."""
    return MultiplierSymbol.radial(lambda k2: k2.astype(np.complex128), name="|xi|^2")


def laplacian_symbol(tau_scale: float) -> MultiplierSymbol:
    """Propagator e^{i τ_scale Δ}, i.e. ξ ↦ exp(-i τ_scale |ξ|²)."""
    return MultiplierSymbol.radial(
        lambda k2: np.exp(-1j * tau_scale * k2), name=f"exp({tau_scale}iΔ)"
    )
