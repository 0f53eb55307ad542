"""Rough data, reference solutions, convergence studies and result files."""

from .data import RoughDataSpec, rough_initial_data
from .reference import (
    ReferencePolicy,
    ReferenceSolution,
    reference_solution,
    steps_for,
)
from .results import (
    format_convergence_csv,
    format_oracle_csv,
    parse_convergence_csv,
    write_text,
)
from .study import (
    ConvergenceRow,
    ConvergenceSpec,
    StudyResult,
    convergence_study,
    fit_order,
    fit_window,
    parse_tau,
)

__all__ = [
    "ConvergenceRow",
    "ConvergenceSpec",
    "ReferencePolicy",
    "ReferenceSolution",
    "RoughDataSpec",
    "StudyResult",
    "convergence_study",
    "fit_order",
    "fit_window",
    "format_convergence_csv",
    "format_oracle_csv",
    "parse_convergence_csv",
    "parse_tau",
    "reference_solution",
    "rough_initial_data",
    "steps_for",
    "write_text",
]
