"""
Classical splitting baselines.

The nonlinear sub-flow u ↦ u·e^{iλτ|u|²} is exact because |u| is conserved
along it; the linear sub-flow is the propagator e^{iτΔ}.
"""

from functools import lru_cache

import numpy as np

from ..spectral import Field, MultiplierSymbol, apply_multiplier, laplacian_symbol
from .config import StepConfig


@lru_cache(maxsize=64)
def _propagator(tau: float) -> MultiplierSymbol:
    return laplacian_symbol(tau)


def nonlinear_flow(u: Field, tau: float, lam: int) -> Field:
    u = u.to_physical()
    return u.with_values(u.values * np.exp(1j * lam * tau * np.abs(u.values) ** 2))


def linear_flow(u: Field, tau: float) -> Field:
    return apply_multiplier(_propagator(tau), u, "physical")


def lie_step(u: Field, cfg: StepConfig) -> Field:
    """Nonlinear flow, then linear flow."""
    return linear_flow(nonlinear_flow(u, cfg.tau, cfg.lam), cfg.tau)


def strang_step(u: Field, cfg: StepConfig) -> Field:
    """Half linear, full nonlinear, half linear."""
    half = 0.5 * cfg.tau
    u = linear_flow(u, half)
    u = nonlinear_flow(u, cfg.tau, cfg.lam)
    return linear_flow(u, half)
