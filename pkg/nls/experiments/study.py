"""
Temporal convergence studies.

For every (method, tau) pair the rough initial data are evolved to T and
compared with a fine-step reference in the discrete H^γ norm. Orders are
least-squares slopes of log(error) against log(tau).
"""

import logging
import math
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Literal

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from ..errors import BlowUpError
from ..integrators import MethodId, evolve
from ..spectral import Field as SpectralField
from ..spectral import SobolevWeight, hgamma_norm, make_grid
from .data import RoughDataSpec, rough_initial_data
from .reference import ReferencePolicy, ReferenceSolution, reference_solution, steps_for

logger = logging.getLogger(__name__)

DEFAULT_TAUS = [2.0**-k for k in range(4, 11)]


def parse_tau(token) -> float:
    """Accept floats and the dyadic shorthand '2^-k'."""
    if isinstance(token, str):
        token = token.strip()
        if "^" in token:
            base, exponent = token.split("^", 1)
            return float(base) ** float(exponent)
    return float(token)


def _split_list(v):
    if isinstance(v, str):
        return [item.strip() for item in v.split(",") if item.strip()]
    return v


class ConvergenceSpec(BaseModel):
    """
    Description of a convergence experiment.

    Attributes:
        d, N: Grid dimension and points per axis
        gamma: Index of the H^γ norm the error is measured in
        s: Regularity exponent of the data (default gamma + 2)
        epsilon: Extra decay of the data
        methods: Integrators to study
        taus: Step sizes, each dividing T
        T: Final time
        lam: Nonlinearity sign (key "lambda" in config files)
        reference_method, tau_ref, crossvalidate: Reference policy; the reference
            is checked against a second method unless crossvalidate is false
        weight: Norm weight, "linear" (experiment norm) or "bessel"
        fit_drop: Number of taus dropped at each end before fitting
    """

    model_config = ConfigDict(frozen=True, extra="forbid", populate_by_name=True)

    d: int = Field(default=2, ge=1)
    N: int = Field(default=128, ge=2)
    gamma: float = Field(default=2.0, ge=0.0)
    s: float | None = Field(default=None, ge=0.0)
    epsilon: float = Field(default=0.0, ge=0.0)
    methods: list[MethodId] = Field(default_factory=lambda: [MethodId.LRI2])
    taus: list[float] = Field(default_factory=lambda: list(DEFAULT_TAUS))
    T: float = Field(default=1.0, gt=0.0)
    lam: Literal[-1, 1] = Field(default=1, alias="lambda")
    reference_method: MethodId = MethodId.LRI2
    tau_ref: float = Field(default=2.0**-14, gt=0.0)
    crossvalidate: bool = True
    weight: SobolevWeight = SobolevWeight.LINEAR
    fit_drop: int = Field(default=1, ge=0)

    @field_validator("methods", mode="before")
    @classmethod
    def parse_methods(cls, v):
        return _split_list(v)

    @field_validator("taus", mode="before")
    @classmethod
    def parse_taus(cls, v):
        return [parse_tau(t) for t in _split_list(v)]

    @field_validator("tau_ref", mode="before")
    @classmethod
    def parse_tau_ref(cls, v):
        return parse_tau(v)

    @field_validator("lam", mode="before")
    @classmethod
    def parse_lambda(cls, v):
        return int(v) if isinstance(v, str) else v

    @model_validator(mode="after")
    def check_steps(self) -> "ConvergenceSpec":
        if self.N % 2 != 0:
            raise ValueError(f"N must be even, got {self.N}")
        if not self.methods:
            raise ValueError("At least one method is required")
        if not self.taus or any(t <= 0 for t in self.taus):
            raise ValueError("taus must be a non-empty list of positive step sizes")
        for tau in [*self.taus, self.tau_ref]:
            steps_for(self.T, tau)
        if self.tau_ref > min(self.taus) / 8:
            raise ValueError(
                f"tau_ref={self.tau_ref} must be at most min(taus)/8={min(self.taus) / 8}"
            )
        return self

    @property
    def data_regularity(self) -> float:
        return self.gamma + 2 if self.s is None else self.s

    @property
    def reference_policy(self) -> ReferencePolicy:
        return ReferencePolicy(
            method=self.reference_method,
            tau_ref=self.tau_ref,
            crossvalidate=self.crossvalidate,
            companion=MethodId.LRI2 if self.reference_method is MethodId.STRANG else MethodId.STRANG,
        )


class ConvergenceRow(BaseModel):
    """One (method, tau) measurement; a NaN error marks a blow-up."""

    model_config = ConfigDict(frozen=True)

    method: MethodId
    d: int
    N: int
    gamma: float
    tau: float
    error: float
    wall_time_seconds: float = 0.0

    @field_validator("error")
    @classmethod
    def check_error(cls, v: float) -> float:
        if v < 0:
            raise ValueError(f"error must be non-negative, got {v}")
        return v

    @property
    def blew_up(self) -> bool:
        return math.isnan(self.error)


class StudyResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    spec: ConvergenceSpec
    rows: list[ConvergenceRow]
    slopes: dict[str, float | None]
    reference_disagreement: float | None = None

    @property
    def blowups(self) -> list[ConvergenceRow]:
        return [row for row in self.rows if row.blew_up]


def fit_window(rows: list[ConvergenceRow], drop: int = 1) -> list[ConvergenceRow]:
    """
    Drop the `drop` largest and smallest taus, keeping at least three rows.

    The coarsest steps are pre-asymptotic and the finest approach the
    reference floor; when too few rows remain the full set is returned.
    """
    ordered = sorted((r for r in rows if not r.blew_up), key=lambda r: r.tau)
    if drop > 0 and len(ordered) - 2 * drop >= 3:
        return ordered[drop:-drop]
    return ordered


def fit_order(rows: list[ConvergenceRow]) -> float:
    """
    Least-squares slope of log(error) against log(tau).

    Raises:
        ValueError: With fewer than three usable rows (finite, positive error,
            distinct tau)
    """
    usable = {}
    for row in rows:
        if math.isfinite(row.error) and row.error > 0:
            usable.setdefault(row.tau, row.error)
    if len(usable) < 3:
        raise ValueError(f"Need at least 3 usable rows to fit an order, got {len(usable)}")
    taus = np.log(np.fromiter(usable.keys(), dtype=np.float64))
    errors = np.log(np.fromiter(usable.values(), dtype=np.float64))
    slope, _ = np.polyfit(taus, errors, 1)
    return float(slope)


def _measure(
    u0: SpectralField,
    reference: SpectralField,
    method: MethodId,
    tau: float,
    spec: ConvergenceSpec,
    timing: bool,
) -> ConvergenceRow:
    started = time.perf_counter()
    try:
        u = evolve(u0, method, tau, steps_for(spec.T, tau), spec.lam)
        diff = reference.to_physical().values - u.values
        error = hgamma_norm(u.with_values(diff), spec.gamma, spec.weight)
    except BlowUpError as exc:
        logger.warning("%s", exc)
        error = math.nan
    elapsed = time.perf_counter() - started if timing else 0.0
    logger.info("%s tau=%g error=%.6e (%.2fs)", method.value, tau, error, elapsed)
    return ConvergenceRow(
        method=method,
        d=spec.d,
        N=spec.N,
        gamma=spec.gamma,
        tau=tau,
        error=error,
        wall_time_seconds=elapsed,
    )


def _measure_task(args) -> ConvergenceRow:
    return _measure(*args)


def convergence_study(
    spec: ConvergenceSpec,
    workers: int = 1,
    cache_dir: Path | str | None = None,
    timing: bool = True,
) -> StudyResult:
    """
    Run the (method × tau) grid of a ConvergenceSpec.

    Args:
        spec: Experiment description
        workers: Worker processes for the rows; 1 runs in-process
        cache_dir: Reference snapshot cache; None disables caching
        timing: Record wall times (False writes 0.0 for reproducible files)

    Returns:
        StudyResult: Rows in (method, tau) order and fitted slopes per method

    Raises:
        CrossValidationError: When cross-validation is requested and fails
    """
    grid = make_grid(spec.d, spec.N)
    data = RoughDataSpec(grid=grid, s=spec.data_regularity, epsilon=spec.epsilon)
    u0 = rough_initial_data(data).to_physical()
    tag = {"d": spec.d, "N": spec.N, "s": repr(data.s), "epsilon": repr(data.epsilon)}
    reference: ReferenceSolution = reference_solution(
        u0, spec.T, spec.reference_policy, spec.lam, cache_dir=cache_dir, cache_tag=tag
    )

    tasks = [
        (u0, reference.field, method, tau, spec, timing)
        for method in spec.methods
        for tau in spec.taus
    ]
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_measure_task, tasks))
    else:
        rows = [_measure_task(task) for task in tasks]

    disagreement = None
    finite = [row.error for row in rows if not row.blew_up]
    if spec.crossvalidate and finite:
        disagreement = reference.validate_against(max(finite), spec.gamma, spec.weight)

    slopes: dict[str, float | None] = {}
    for method in spec.methods:
        method_rows = [row for row in rows if row.method is method]
        try:
            slopes[method.value] = fit_order(fit_window(method_rows, spec.fit_drop))
        except ValueError as exc:
            logger.warning("No slope for %s: %s", method.value, exc)
            slopes[method.value] = None

    return StudyResult(
        spec=spec, rows=rows, slopes=slopes, reference_disagreement=disagreement
    )
