from dataclasses import dataclass
import os
from dotenv import load_dotenv
from models.constants import (
    DEFAULT_TRUNCATION, DEFAULT_HTPY_BOUND, DEFAULT_MAX_CELLS,
    DEFAULT_LOG_LEVEL, CHECKER_LOG_LEVEL, LOG_FORMAT,
    ENV_MAX_CELLS, ENV_TRUNCATION, ENV_HTPY_BOUND, ENV_LOG_LEVEL,
)

load_dotenv()


def _env_int(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{name} must be an integer, got {raw!r}")
    if value < 0:
        raise ValueError(f"{name} must be non-negative, got {value}")
    return value


@dataclass
class CubixConfig:
    truncation: int
    htpy_bound: int
    max_cells: int
    log_level: str


def load_config() -> CubixConfig:
    """Read settings from the environment (and a .env file if present)."""
    return CubixConfig(
        truncation=_env_int(ENV_TRUNCATION, DEFAULT_TRUNCATION),
        htpy_bound=_env_int(ENV_HTPY_BOUND, DEFAULT_HTPY_BOUND),
        max_cells=_env_int(ENV_MAX_CELLS, DEFAULT_MAX_CELLS),
        log_level=os.getenv(ENV_LOG_LEVEL) or DEFAULT_LOG_LEVEL,
    )


CUBIX_CONFIG = load_config()

# Logging configuration
LOGGING_CONFIG = {
    'level': CUBIX_CONFIG.log_level,
    'format': LOG_FORMAT,
    'checker_level': CHECKER_LOG_LEVEL
}
