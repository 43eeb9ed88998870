"""Runtime configuration read from LSPAC_* environment variables."""

import logging
import os
from datetime import datetime
from pathlib import Path
from typing import Optional

from platformdirs import user_log_dir

from .errors import InputError

logger = logging.getLogger(__name__)

_TRUE_VALUES = ("1", "true", "yes", "on")


def _env_int(name: str, default: int, minimum: int = 0) -> int:
    """Read a non-negative integer from the environment.

    Raises:
        InputError: If the variable is set but not an integer >= ``minimum``.
    """
    raw = os.getenv(name, "").strip()
    if not raw:
        return default
    try:
        value = int(raw)
    except ValueError as e:
        raise InputError(f"{name} must be an integer, got {raw!r}") from e
    if value < minimum:
        raise InputError(f"{name} must be >= {minimum}, got {value}")
    return value


class Config:
    def __init__(
        self,
        log_level: str = "INFO",
        log_file_dir: Optional[Path] = None,
        log_to_file: bool = False,
        workers: int = 0,
        markov_max_n: int = 24,
        lambda_max_n: int = 20,
        splice_budget: int = 10_000,
        period_bound: int = 10,
    ):
        self.log_level = log_level
        self.log_file_dir = log_file_dir
        self.log_to_file = log_to_file
        self.workers = workers
        self.markov_max_n = markov_max_n
        self.lambda_max_n = lambda_max_n
        self.splice_budget = splice_budget
        self.period_bound = period_bound

    @property
    def log_file_path(self) -> Optional[Path]:
        """Dated log file inside ``log_file_dir`` when file logging is on."""
        if not self.log_to_file:
            return None
        directory = self.log_file_dir or Path(user_log_dir("lspac"))
        return directory / f"{datetime.now().strftime('%Y-%m-%d')}.log"

    @classmethod
    def from_env(cls) -> "Config":
        log_dir = os.getenv("LSPAC_LOG_DIR", "")
        return cls(
            log_level=os.getenv("LSPAC_LOG_LEVEL", "INFO"),
            log_file_dir=Path(log_dir) if log_dir else None,
            log_to_file=os.getenv("LSPAC_LOG_TO_FILE", "").lower() in _TRUE_VALUES,
            workers=_env_int("LSPAC_WORKERS", 0),
            markov_max_n=_env_int("LSPAC_MARKOV_MAX_N", 24, minimum=1),
            lambda_max_n=_env_int("LSPAC_LAMBDA_MAX_N", 20, minimum=1),
            splice_budget=_env_int("LSPAC_SPLICE_BUDGET", 10_000, minimum=1),
            period_bound=_env_int("LSPAC_PERIOD_BOUND", 10, minimum=1),
        )


config = Config.from_env()
