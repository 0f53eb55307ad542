"""Exceptions raised by the solver and the experiment harness.

Each exception carries the exit code the CLI returns for it.
"""


class NLSError(Exception):
    """Base class for all errors raised by the nls package."""

    exit_code = 1


class BlowUpError(NLSError):
    """A time step produced non-finite values."""

    exit_code = 2

    def __init__(self, step: int, time: float, method: str | None = None):
        self.step = step
        self.time = time
        self.method = method
        where = f" ({method})" if method else ""
        super().__init__(
            f"Non-finite values detected at step {step}, t={time:.6g}{where}"
        )


class CrossValidationError(NLSError):
    """Two reference solutions disagree by more than the accepted threshold."""

    exit_code = 3

    def __init__(self, disagreement: float, threshold: float):
        self.disagreement = disagreement
        self.threshold = threshold
        super().__init__(
            "Reference cross-validation failed: disagreement "
            f"{disagreement:.6e} exceeds threshold {threshold:.6e}"
        )


class ConfigError(NLSError):
    """Invalid environment settings or study configuration."""

    exit_code = 4
