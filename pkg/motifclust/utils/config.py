"""Configuration management utilities."""

import os
from typing import Optional

from ..core.exceptions import ConfigurationError

THREADS_ENV = "MOTIFCLUST_THREADS"
LOG_LEVEL_ENV = "MOTIFCLUST_LOG_LEVEL"
BC_NODE_LIMIT_ENV = "MOTIFCLUST_BC_NODE_LIMIT"

DEFAULT_BC_NODE_LIMIT = 20_000
DEFAULT_MIN_COMMUNITY_SIZE = 3
DEFAULT_JUMP_FACTOR = 0.1


def _positive_int_from_env(name: str) -> Optional[int]:
    raw = os.environ.get(name)
    if raw is None or raw.strip() == "":
        return None
    try:
        value = int(raw)
    except ValueError:
        raise ConfigurationError(f"{name} must be an integer, got {raw!r}", variable=name)
    if value < 1:
        raise ConfigurationError(f"{name} must be >= 1, got {value}", variable=name)
    return value


def get_default_threads(threads: Optional[int] = None) -> int:
    """Resolve the worker count: explicit value, then MOTIFCLUST_THREADS, then all cores."""
    if threads is not None:
        if threads < 1:
            raise ConfigurationError(f"threads must be >= 1, got {threads}")
        return threads

    env_threads = _positive_int_from_env(THREADS_ENV)
    if env_threads is not None:
        return env_threads

    return os.cpu_count() or 1


def get_default_log_level() -> str:
    """Get default log level name from the environment."""
    return os.environ.get(LOG_LEVEL_ENV, "WARNING").upper()


def get_default_bc_node_limit() -> int:
    """Get the betweenness node-count guard from the environment."""
    return _positive_int_from_env(BC_NODE_LIMIT_ENV) or DEFAULT_BC_NODE_LIMIT
