"""Time integrators for the cubic nonlinear Schrödinger equation."""

from .config import MethodId, StepConfig
from .evolve import STEPPERS, evolve, mass
from .lri import lri1_step, lri2_step, lri2_twisted_step, twist, untwist
from .splitting import lie_step, linear_flow, nonlinear_flow, strang_step

__all__ = [
    "STEPPERS",
    "MethodId",
    "StepConfig",
    "evolve",
    "lie_step",
    "linear_flow",
    "lri1_step",
    "lri2_step",
    "lri2_twisted_step",
    "mass",
    "nonlinear_flow",
    "strang_step",
    "twist",
    "untwist",
]
