"""
Discrete Fourier transforms on the torus grid.

The forward transform carries the 1/N^d factor, so a spectral coefficient
approximates (2π)^-d ∫ e^{-ix·ξ} f(x) dx by the trapezoidal rule.
scipy.fft keeps its own plan cache and is safe to call from several threads.
"""

import logging

import numpy as np
import scipy.fft

logger = logging.getLogger(__name__)

_workers: int | None = None


def set_workers(workers: int | None) -> None:
    """Set the number of threads scipy.fft may use (None means one)."""
    global _workers
    if workers is not None and workers < 1:
        raise ValueError(f"FFT workers must be positive, got {workers}")
    _workers = workers
    logger.debug("FFT workers set to %s", workers)


def get_workers() -> int | None:
    return _workers


def forward(values: np.ndarray) -> np.ndarray:
    """Physical samples -> Fourier coefficients."""
    return scipy.fft.fftn(values, norm="forward", workers=_workers)


def inverse(coefficients: np.ndarray) -> np.ndarray:
    """Fourier coefficients -> physical samples."""
    return scipy.fft.ifftn(coefficients, norm="forward", workers=_workers)
