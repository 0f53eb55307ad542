"""
Quadrature oracles for the phase approximation behind the integrator.

For a "good" phase α and a "bad" phase β the exponential e^{is(α+β)} is
replaced by e^{isα} + iβ e^{isβ} M_τ(e^{iα·}), where

    M_τ(g) = (1/τ) ∫_0^τ σ g(σ) dσ   and   M_τ(e^{iα·}) = -τ ψ(iτα).

Integrated over [0, τ] this gives the closed form
τφ(iτα) - τ(e^{iτβ} - 1)ψ(iτα) exactly, and it differs from
∫_0^τ e^{is(α+β)} ds by a remainder R₂ bounded by a multiple of τ³β².
The functions here evaluate both sides independently by composite Simpson
quadrature so the identity and the remainder scaling can be checked.
"""

from typing import Literal

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator
from scipy import integrate

from .functions import phi, psi


class QuadratureRule(BaseModel):
    """Composite Simpson rule on [0, τ] with an odd number of nodes."""

    model_config = ConfigDict(frozen=True)

    node_count: int = Field(default=1001, description="Number of nodes, odd and >= 3")
    scheme: Literal["composite-simpson"] = "composite-simpson"

    @field_validator("node_count")
    @classmethod
    def validate_odd(cls, v: int) -> int:
        if v < 3 or v % 2 == 0:
            raise ValueError(f"Simpson needs an odd node count >= 3, got {v}")
        return v

    def nodes(self, tau: float) -> np.ndarray:
        return np.linspace(0.0, tau, self.node_count)

    def integrate(self, fn, tau: float) -> complex:
        """∫_0^τ fn(s) ds for a vectorized complex integrand."""
        s = self.nodes(tau)
        return complex(integrate.simpson(fn(s), x=s))


DEFAULT_RULE = QuadratureRule()


def cubic_phase(xi1, xi2, xi3) -> float:
    """φ₃ = |ξ|² + |ξ₁|² - |ξ₂|² - |ξ₃|² with ξ = ξ₁ + ξ₂ + ξ₃."""
    xi1, xi2, xi3 = (np.atleast_1d(np.asarray(v, dtype=np.float64)) for v in (xi1, xi2, xi3))
    xi = xi1 + xi2 + xi3
    return float(xi @ xi + xi1 @ xi1 - xi2 @ xi2 - xi3 @ xi3)


class PhasePair(BaseModel):
    """
    Split of the cubic phase into a good part α and a bad part β.

    Attributes:
        alpha: Good phase, 2|ξ₁|² in the scheme
        beta: Bad phase, 2ξ₁·ξ₂ + 2ξ₁·ξ₃ + 2ξ₂·ξ₃
        tau: Step size (> 0)
    """

    model_config = ConfigDict(frozen=True)

    alpha: float
    beta: float
    tau: float = Field(gt=0.0)

    @classmethod
    def from_frequencies(cls, xi1, xi2, xi3, tau: float) -> "PhasePair":
        xi1, xi2, xi3 = (np.atleast_1d(np.asarray(v, dtype=np.float64)) for v in (xi1, xi2, xi3))
        alpha = 2.0 * float(xi1 @ xi1)
        beta = 2.0 * float(xi1 @ xi2 + xi1 @ xi3 + xi2 @ xi3)
        return cls(alpha=alpha, beta=beta, tau=tau)

    @property
    def phase(self) -> float:
        return self.alpha + self.beta


def mtau_quadrature(alpha: float, tau: float, rule: QuadratureRule = DEFAULT_RULE) -> complex:
    """M_τ(e^{iα·}) = (1/τ) ∫_0^τ σ e^{iσα} dσ by quadrature."""
    if tau <= 0:
        raise ValueError(f"tau must be positive, got {tau}")
    return rule.integrate(lambda s: s * np.exp(1j * alpha * s), tau) / tau


def mtau_closed_form(alpha: float, tau: float) -> complex:
    return complex(-tau * psi(1j * tau * alpha))


def integral_exp_quadrature(alpha: float, tau: float, rule: QuadratureRule = DEFAULT_RULE) -> complex:
    """∫_0^τ e^{isα} ds by quadrature; equals τφ(iτα)."""
    return rule.integrate(lambda s: np.exp(1j * alpha * s), tau)


def lemma22_lhs(pp: PhasePair, rule: QuadratureRule = DEFAULT_RULE) -> complex:
    """∫_0^τ (e^{isα} + iβ e^{isβ} M_τ(e^{iα·})) ds, both integrals by quadrature."""
    mean = mtau_quadrature(pp.alpha, pp.tau, rule)
    return rule.integrate(
        lambda s: np.exp(1j * pp.alpha * s) + 1j * pp.beta * np.exp(1j * pp.beta * s) * mean,
        pp.tau,
    )


def lemma22_rhs(pp: PhasePair) -> complex:
    """Closed form τφ(iτα) - τ(e^{iτβ} - 1)ψ(iτα)."""
    z = 1j * pp.tau * pp.alpha
    return complex(
        pp.tau * phi(z) - pp.tau * np.expm1(1j * pp.tau * pp.beta) * psi(z)
    )


def r2_residual(pp: PhasePair) -> complex:
    """R₂ = ∫_0^τ e^{is(α+β)} ds - lemma22_rhs(pp), with the integral in closed form."""
    exact = pp.tau * phi(1j * pp.tau * pp.phase)
    return complex(exact) - lemma22_rhs(pp)


def r1_residual(pp: PhasePair) -> complex:
    """
    Remainder of the two-term approximation e^{isα} + e^{isβ} - 1.

    Bounded by a multiple of τ³|α||β|; kept to compare against R₂.
    """
    tau = pp.tau
    exact = tau * phi(1j * tau * pp.phase)
    approx = tau * phi(1j * tau * pp.alpha) + tau * phi(1j * tau * pp.beta) - tau
    return complex(exact - approx)


def oracle_table(
    samples: int = 20,
    exponents: range = range(3, 11),
    seed: int = 2022,
    bound: float = 5.0,
    with_r1: bool = False,
) -> list[dict[str, float]]:
    """
    Deterministic sweep of |R₂| over random (α, β) and dyadic τ = 2^-k.

    Returns:
        list[dict]: Rows with keys alpha, beta, tau, abs_r2 (and abs_r1)
    """
    rng = np.random.default_rng(seed)
    rows = []
    for _ in range(samples):
        alpha = float(rng.uniform(-bound, bound))
        beta = float(rng.uniform(-bound, bound))
        if abs(beta) < 0.25:
            beta = float(np.copysign(0.25, beta))
        for k in exponents:
            pp = PhasePair(alpha=alpha, beta=beta, tau=2.0**-k)
            row = {"alpha": alpha, "beta": beta, "tau": pp.tau, "abs_r2": abs(r2_residual(pp))}
            if with_r1:
                row["abs_r1"] = abs(r1_residual(pp))
            rows.append(row)
    return rows
