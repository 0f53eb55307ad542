"""Low-regularity exponential integrators for the cubic NLS on the torus."""

__version__ = "0.1.0"
