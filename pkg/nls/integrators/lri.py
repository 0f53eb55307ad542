"""
Low-regularity exponential integrators for i∂_t u + Δu + λ|u|²u = 0.

The second-order scheme reads

    u^{n+1} = e^{iτΔ}u + iλτ e^{iτΔ}{[φ(-2iτΔ) + ψ(-2iτΔ)]ū · u²}
              - iλτ [e^{iτΔ}ψ(-2iτΔ)ū] · (e^{iτΔ}u)²
              - (τ²/2) e^{iτΔ}[|u|⁴u]

Products are formed pointwise in physical space on the collocation grid,
without dealiasing; every operator is applied as a Fourier multiplier.
Operators act on the conjugated factor ū exactly as written.
"""

from functools import lru_cache

import numpy as np

from ..phi import phi_symbol, psi_symbol
from ..spectral import Field, MultiplierSymbol, apply_multiplier, laplacian_symbol
from .config import StepConfig


@lru_cache(maxsize=64)
def _lri2_symbols(tau: float) -> tuple[MultiplierSymbol, MultiplierSymbol, MultiplierSymbol]:
    propagator = laplacian_symbol(tau)
    psi_m = psi_symbol(tau)
    return propagator, phi_symbol(tau) + psi_m, propagator * psi_m


@lru_cache(maxsize=64)
def _lri1_symbols(tau: float) -> tuple[MultiplierSymbol, MultiplierSymbol]:
    return laplacian_symbol(tau), phi_symbol(tau)


def twist(u: Field, t: float) -> Field:
    """Twisted variable v = e^{-itΔ}u."""
    return apply_multiplier(laplacian_symbol(-t), u, "physical")


def untwist(v: Field, t: float) -> Field:
    """Inverse of twist: u = e^{itΔ}v."""
    return apply_multiplier(laplacian_symbol(t), v, "physical")


def lri2_step(u: Field, cfg: StepConfig) -> Field:
    """One step of the second-order low-regularity integrator."""
    tau, lam = cfg.tau, cfg.lam
    propagator, phi_plus_psi, propagated_psi = _lri2_symbols(tau)

    u = u.to_physical()
    ubar = u.conj()
    u_vals = u.values
    free = apply_multiplier(propagator, u).values

    cubic = apply_multiplier(phi_plus_psi, ubar).values * u_vals**2
    mixed = apply_multiplier(propagated_psi, ubar).values * free**2
    quintic = np.abs(u_vals) ** 4 * u_vals

    # e^{iτΔ} is linear, so the first, second and last terms share one application
    inner = u.with_values(u_vals + 1j * lam * tau * cubic - 0.5 * tau**2 * quintic)
    out = apply_multiplier(propagator, inner).values - 1j * lam * tau * mixed
    return u.with_values(out)


def lri2_twisted_step(v: Field, cfg: StepConfig) -> Field:
    """
    The map Φ^n acting on the twisted variable v = e^{-it_nΔ}u.

    The second line uses the propagator at t_{n-1} = t_n - τ, taken
    literally at n = 0 (negative time argument).
    """
    tau, lam, t_n = cfg.tau, cfg.lam, cfg.t_n
    t_next, t_prev = t_n + tau, t_n - tau
    phi_m, psi_m = phi_symbol(tau), psi_symbol(tau)

    v = v.to_physical()
    vbar = v.conj()
    w_n = untwist(v, t_n).values
    w_next = untwist(v, t_next).values

    first = apply_multiplier(phi_m * laplacian_symbol(-t_n), vbar).values * w_n**2
    second = apply_multiplier(psi_m * laplacian_symbol(-t_prev), vbar).values * w_next**2
    third = apply_multiplier(psi_m * laplacian_symbol(-t_n), vbar).values * w_n**2
    fourth = np.abs(w_n) ** 4 * w_n

    at_n = v.with_values(1j * lam * tau * (first + third) - 0.5 * tau**2 * fourth)
    at_next = v.with_values(-1j * lam * tau * second)
    out = v.values + twist(at_n, t_n).values + twist(at_next, t_next).values
    return v.with_values(out)


def lri1_step(u: Field, cfg: StepConfig) -> Field:
    """First-order low-regularity integrator e^{iτΔ}[u + iλτ u²·φ(-2iτΔ)ū]."""
    tau, lam = cfg.tau, cfg.lam
    propagator, phi_m = _lri1_symbols(tau)
    u = u.to_physical()
    gain = apply_multiplier(phi_m, u.conj()).values * u.values**2
    inner = u.with_values(u.values + 1j * lam * tau * gain)
    return apply_multiplier(propagator, inner, "physical")
