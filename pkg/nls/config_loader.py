# config_loader.py
import logging
import os
from pathlib import Path

import psutil
from dotenv import dotenv_values, load_dotenv  # To install: pip install python-dotenv
from pydantic import BaseModel, ConfigDict, Field, ValidationError

from .errors import ConfigError
from .experiments.study import ConvergenceSpec

logger = logging.getLogger(__name__)


class AppConfig(BaseModel):
    """Process-wide settings read from NLS_* environment variables."""

    model_config = ConfigDict(frozen=True)

    cache_dir: Path = Field(description="Reference snapshot cache directory")
    fft_workers: int = Field(ge=1, description="Threads for scipy.fft")
    study_workers: int = Field(ge=1, description="Processes for convergence rows")
    log_level: str = Field(description="Logging level name")


def _default_study_workers() -> int:
    return psutil.cpu_count(logical=False) or 1


def load_app_config(env_path: Path | str | None = None) -> AppConfig:
    """
    Loads settings from the environment, after reading an optional .env file.

    Args:
        env_path: .env file to load; defaults to ./.env (a missing default file is fine)

    Raises:
        ConfigError: If an explicitly given .env file is missing or a value is invalid.

    Returns:
        AppConfig: The validated settings.
    """
    explicit = env_path is not None
    env_path = Path(env_path) if explicit else Path.cwd() / ".env"

    if env_path.exists():
        load_dotenv(dotenv_path=env_path)
    elif explicit:
        error_message = f"Configuration error: .env file not found at {env_path}"
        logger.error(error_message)
        raise ConfigError(error_message)

    try:
        return AppConfig(
            cache_dir=Path(os.getenv("NLS_CACHE_DIR", ".nls_cache")),
            fft_workers=int(os.getenv("NLS_FFT_WORKERS", "1")),
            study_workers=int(os.getenv("NLS_STUDY_WORKERS", str(_default_study_workers()))),
            log_level=os.getenv("NLS_LOG_LEVEL", "WARNING").upper(),
        )
    except (ValueError, ValidationError) as e:
        error_message = f"Configuration error: invalid NLS_* environment value: {e}"
        logger.error(error_message)
        raise ConfigError(error_message) from e


def _allowed_keys() -> set[str]:
    keys = set()
    for name, info in ConvergenceSpec.model_fields.items():
        keys.add(name)
        if info.alias:
            keys.add(info.alias)
    return keys


def load_convergence_config(path: Path | str) -> ConvergenceSpec:
    """
    Reads a flat `key = value` study file into a ConvergenceSpec.

    Lists are comma-separated and tau values may use the `2^-k` shorthand.

    Raises:
        ConfigError: If the file is missing, holds unknown or empty keys, or fails validation.
    """
    path = Path(path)
    if not path.exists():
        error_message = f"Configuration error: study file not found at {path}"
        logger.error(error_message)
        raise ConfigError(error_message)

    values = dotenv_values(dotenv_path=path, interpolate=False)

    unknown = sorted(set(values) - _allowed_keys())
    if unknown:
        error_message = f"Configuration error: unknown keys {unknown} in {path}"
        logger.error(error_message)
        raise ConfigError(error_message)

    empty = sorted(key for key, value in values.items() if value is None or value == "")
    if empty:
        error_message = f"Configuration error: keys without a value {empty} in {path}"
        logger.error(error_message)
        raise ConfigError(error_message)

    try:
        return ConvergenceSpec.model_validate(values)
    except ValidationError as e:
        error_message = f"Configuration error in {path}: {e}"
        logger.error(error_message)
        raise ConfigError(error_message) from e
