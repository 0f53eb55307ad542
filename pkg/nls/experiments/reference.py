"""
Fine-step reference solutions.

The reference is the chosen method at a small step τ_ref. By default a second,
structurally different method is run as well, and the pair is only accepted
when their H^γ distance is a small fraction of the coarsest measured error.
Fields are cached as snapshots keyed by the run parameters; an unreadable
cache file counts as a miss.
"""

import hashlib
import logging
from pathlib import Path

from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..errors import CrossValidationError
from ..integrators import MethodId, evolve
from ..spectral import Field as SpectralField
from ..spectral import SobolevWeight, hgamma_norm, read_snapshot, write_snapshot

logger = logging.getLogger(__name__)


class ReferencePolicy(BaseModel):
    """
    Attributes:
        method: Integrator for the reference
        tau_ref: Reference step size
        crossvalidate: Also run `companion` and compare
        companion: Second method used for cross-validation
        tolerance: Accepted disagreement as a fraction of the coarsest error
    """

    model_config = ConfigDict(frozen=True)

    method: MethodId = MethodId.LRI2
    tau_ref: float = Field(default=2.0**-14, gt=0.0)
    crossvalidate: bool = True
    companion: MethodId = MethodId.STRANG
    tolerance: float = Field(default=0.01, gt=0.0)

    @model_validator(mode="after")
    def check_companion(self) -> "ReferencePolicy":
        if self.crossvalidate and self.companion is self.method:
            raise ValueError(f"Cross-validation needs a second method, got {self.method.value} twice")
        return self


class ReferenceSolution(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    field: SpectralField
    policy: ReferencePolicy
    companion: SpectralField | None = None

    def disagreement(
        self, gamma: float, weight: SobolevWeight | str = SobolevWeight.LINEAR
    ) -> float | None:
        if self.companion is None:
            return None
        diff = self.field.to_physical().values - self.companion.to_physical().values
        return hgamma_norm(self.field.with_values(diff), gamma, weight)

    def validate_against(
        self,
        coarsest_error: float,
        gamma: float,
        weight: SobolevWeight | str = SobolevWeight.LINEAR,
    ) -> float | None:
        """
        Check the cross-validation criterion.

        Raises:
            CrossValidationError: If the two references disagree by more than
                tolerance × coarsest_error
        """
        gap = self.disagreement(gamma, weight)
        if gap is None:
            return None
        threshold = self.policy.tolerance * coarsest_error
        if not gap <= threshold:
            logger.error("Reference disagreement %.3e exceeds %.3e", gap, threshold)
            raise CrossValidationError(disagreement=gap, threshold=threshold)
        logger.info("Reference cross-validation passed: %.3e <= %.3e", gap, threshold)
        return gap


def steps_for(t_end: float, tau: float) -> int:
    """Integer step count for t_end/tau, rejecting non-dividing steps."""
    n = round(t_end / tau)
    if n < 1 or abs(n * tau - t_end) > 1e-9 * max(1.0, abs(t_end)):
        raise ValueError(f"Step size {tau} does not divide final time {t_end}")
    return n


def cache_key(tag: dict, method: MethodId, tau_ref: float, lam: int, t_end: float) -> str:
    parts = dict(tag)
    parts.update(method=method.value, tau_ref=repr(float(tau_ref)), lam=lam, T=repr(float(t_end)))
    text = ";".join(f"{k}={parts[k]}" for k in sorted(parts))
    return hashlib.sha1(text.encode("utf-8")).hexdigest()[:20]


def _cached_evolve(
    u0: SpectralField,
    method: MethodId,
    t_end: float,
    tau_ref: float,
    lam: int,
    cache_dir: Path | None,
    cache_tag: dict | None,
) -> SpectralField:
    path = None
    if cache_dir is not None and cache_tag is not None:
        path = Path(cache_dir) / f"ref-{cache_key(cache_tag, method, tau_ref, lam, t_end)}.nlsf"
        if path.exists():
            try:
                field = read_snapshot(path)
            except ValueError as exc:
                logger.warning("Ignoring unreadable cached reference %s: %s", path, exc)
            else:
                logger.info("Using cached reference %s", path)
                return field
    logger.info("Computing %s reference at tau_ref=%g", method.value, tau_ref)
    field = evolve(u0, method, tau_ref, steps_for(t_end, tau_ref), lam)
    if path is not None:
        write_snapshot(path, field)
    return field


def reference_solution(
    u0: SpectralField,
    t_end: float,
    policy: ReferencePolicy = ReferencePolicy(),
    lam: int = 1,
    cache_dir: Path | str | None = None,
    cache_tag: dict | None = None,
) -> ReferenceSolution:
    """
    Compute (or load) the reference solution at t_end.

    Args:
        u0: Initial field
        t_end: Final time, divisible by policy.tau_ref
        policy: Reference method, step and cross-validation settings
        lam: Nonlinearity sign
        cache_dir: Snapshot cache directory; None disables caching
        cache_tag: Parameters identifying u0 (e.g. d, N, s, epsilon); required for caching

    Returns:
        ReferenceSolution: The reference field and, when cross-validating, its companion
    """
    cache_dir = Path(cache_dir) if cache_dir is not None else None
    field = _cached_evolve(u0, policy.method, t_end, policy.tau_ref, lam, cache_dir, cache_tag)
    companion = None
    if policy.crossvalidate:
        companion = _cached_evolve(
            u0, policy.companion, t_end, policy.tau_ref, lam, cache_dir, cache_tag
        )
    return ReferenceSolution(field=field, policy=policy, companion=companion)
