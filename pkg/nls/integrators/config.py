from enum import Enum
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field


class MethodId(str, Enum):
    LRI2 = "lri2"
    LRI2_TWISTED = "lri2_twisted"
    LIE = "lie"
    STRANG = "strang"
    LRI1 = "lri1"


class StepConfig(BaseModel):
    """
    Parameters of a single time step.

    Attributes:
        tau: Step size (> 0)
        lam: Nonlinearity sign λ in i∂_t u + Δu + λ|u|²u = 0
        t_n: Current time, used by the twisted-variable form only
    """

    model_config = ConfigDict(frozen=True, populate_by_name=True)

    tau: float = Field(gt=0.0, description="Step size")
    lam: Literal[-1, 1] = Field(default=1, alias="lambda", description="Nonlinearity sign")
    t_n: float = Field(default=0.0, description="Current time t_n = n·tau")
