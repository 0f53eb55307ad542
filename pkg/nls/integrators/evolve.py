"""
Time stepping driver.

evolve() iterates one of the registered step functions. The twisted method
iterates v = e^{-itΔ}u with t_n = n·τ threaded into each step and is
untwisted once at the end (and for observers).
"""

import logging
from collections.abc import Callable

import numpy as np
from tqdm import tqdm

from ..errors import BlowUpError
from ..spectral import Field, l2_norm
from .config import MethodId, StepConfig
from .lri import lri1_step, lri2_step, lri2_twisted_step, untwist
from .splitting import lie_step, strang_step

logger = logging.getLogger(__name__)

StepFunction = Callable[[Field, StepConfig], Field]
Observer = Callable[[int, float, Field], None]

STEPPERS: dict[MethodId, StepFunction] = {
    MethodId.LRI2: lri2_step,
    MethodId.LRI2_TWISTED: lri2_twisted_step,
    MethodId.LIE: lie_step,
    MethodId.STRANG: strang_step,
    MethodId.LRI1: lri1_step,
}


def mass(f: Field) -> float:
    """Squared L²_N norm, conserved by the exact flow."""
    return l2_norm(f) ** 2


def evolve(
    u0: Field,
    method: MethodId | str,
    tau: float,
    n_steps: int,
    lam: int = 1,
    observer: Observer | None = None,
    progress: bool = False,
) -> Field:
    """
    Apply n_steps steps of the chosen method starting from u0.

    Args:
        u0: Initial field (any representation)
        method: Integrator identifier
        tau: Step size
        n_steps: Number of steps (>= 0)
        lam: Nonlinearity sign ±1
        observer: Optional callback receiving (n, t_n, u^n) after every step
        progress: Show a progress bar

    Returns:
        Field: u^{n_steps} in physical representation

    Raises:
        BlowUpError: If a step produces non-finite values
    """
    method = MethodId(method)
    if n_steps < 0:
        raise ValueError(f"n_steps must be non-negative, got {n_steps}")
    step = STEPPERS[method]
    twisted = method is MethodId.LRI2_TWISTED
    state = u0.to_physical()
    logger.debug("evolve %s: tau=%g, n_steps=%d, lambda=%d", method.value, tau, n_steps, lam)

    steps = range(n_steps)
    if progress:
        steps = tqdm(steps, desc=method.value, leave=False)

    # overflow is reported through BlowUpError, not floating-point warnings
    with np.errstate(over="ignore", invalid="ignore"):
        for n in steps:
            cfg = StepConfig(tau=tau, lam=lam, t_n=n * tau)
            state = step(state, cfg)
            t_next = (n + 1) * tau
            if not state.is_finite():
                logger.error("Blow-up in %s at step %d", method.value, n + 1)
                raise BlowUpError(step=n + 1, time=t_next, method=method.value)
            if observer is not None:
                observer(n + 1, t_next, untwist(state, t_next) if twisted else state)

    if twisted:
        state = untwist(state, n_steps * tau)
    return state
