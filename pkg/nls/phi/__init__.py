"""phi-functions, their multiplier symbols and quadrature oracles."""

from .functions import SERIES_SWITCH, phi, phi_symbol, psi, psi_symbol
from .oracle import (
    DEFAULT_RULE,
    PhasePair,
    QuadratureRule,
    cubic_phase,
    integral_exp_quadrature,
    lemma22_lhs,
    lemma22_rhs,
    mtau_closed_form,
    mtau_quadrature,
    oracle_table,
    r1_residual,
    r2_residual,
)

__all__ = [
    "DEFAULT_RULE",
    "PhasePair",
    "QuadratureRule",
    "SERIES_SWITCH",
    "cubic_phase",
    "integral_exp_quadrature",
    "lemma22_lhs",
    "lemma22_rhs",
    "mtau_closed_form",
    "mtau_quadrature",
    "oracle_table",
    "phi",
    "phi_symbol",
    "psi",
    "psi_symbol",
    "r1_residual",
    "r2_residual",
]
