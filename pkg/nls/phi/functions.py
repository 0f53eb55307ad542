"""
Stable evaluation of the phi-functions

    φ(z) = (e^z - 1) / z,            φ(0) = 1
    ψ(z) = (e^z - 1 - z e^z) / z²,   ψ(0) = -1/2

and their Fourier-multiplier symbols φ(-2iτΔ), ψ(-2iτΔ).

Near zero both quotients cancel catastrophically, so |z| below
SERIES_SWITCH uses a truncated Taylor series instead.
"""

import math

import numpy as np
from numpy.polynomial import polynomial

from ..spectral.multipliers import MultiplierSymbol

SERIES_SWITCH = 0.05
SERIES_TERMS = 12

# φ(z) = Σ z^k / (k+1)!
_PHI_COEFFS = np.array([1.0 / math.factorial(k + 1) for k in range(SERIES_TERMS)])
# ψ(z) = -Σ (k+1) z^k / (k+2)!
_PSI_COEFFS = np.array(
    [-(k + 1) / math.factorial(k + 2) for k in range(SERIES_TERMS)]
)


def _evaluate(z, coeffs: np.ndarray, direct):
    z = np.asarray(z, dtype=np.complex128)
    out = np.empty_like(z)
    small = np.abs(z) < SERIES_SWITCH
    out[small] = polynomial.polyval(z[small], coeffs)
    large = ~small
    out[large] = direct(z[large])
    return out[()] if out.ndim == 0 else out


def _phi_direct(z: np.ndarray) -> np.ndarray:
    return np.expm1(z) / z


def _psi_direct(z: np.ndarray) -> np.ndarray:
    return (np.expm1(z) - z * np.exp(z)) / (z * z)


def phi(z):
    """φ(z) = (e^z - 1)/z, elementwise for scalars or arrays."""
    return _evaluate(z, _PHI_COEFFS, _phi_direct)


def psi(z):
    """ψ(z) = (e^z - 1 - z e^z)/z², elementwise for scalars or arrays."""
    return _evaluate(z, _PSI_COEFFS, _psi_direct)


def _check_sign(sign: int) -> None:
    if sign not in (-1, 1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")


def phi_symbol(tau: float, sign: int = 1) -> MultiplierSymbol:
    """
    Symbol ξ ↦ φ(sign·2iτ|ξ|²).

    sign=+1 realizes φ(-2iτΔ), since -2iτΔ acts on e^{iξ·x} as 2iτ|ξ|².
    """
    if tau <= 0:
        raise ValueError(f"tau must be positive, got {tau}")
    _check_sign(sign)
    return MultiplierSymbol.radial(
        lambda k2: phi(sign * 2j * tau * k2), name=f"phi({-2 * sign}i*{tau}Δ)"
    )


def psi_symbol(tau: float, sign: int = 1) -> MultiplierSymbol:
    """Symbol ξ ↦ ψ(sign·2iτ|ξ|²); sign=+1 realizes ψ(-2iτΔ)."""
    if tau <= 0:
        raise ValueError(f"tau must be positive, got {tau}")
    _check_sign(sign)
    return MultiplierSymbol.radial(
        lambda k2: psi(sign * 2j * tau * k2), name=f"psi({-2 * sign}i*{tau}Δ)"
    )
