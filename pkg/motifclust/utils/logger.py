"""Structured logging for motifclust."""
import logging
import sys
from functools import lru_cache
from typing import Optional, Union

from .config import get_default_log_level

ROOT_LOGGER = "motifclust"


def _resolve_level(level: Union[int, str]) -> int:
    if isinstance(level, int):
        return level
    resolved = logging.getLevelName(str(level).strip().upper())
    if not isinstance(resolved, int):
        raise ValueError(f"unknown log level: {level}")
    return resolved


class MotifClustLogger:
    """Package logger writing timestamped lines to stderr."""

    def __init__(self, name: str, level: Optional[Union[int, str]] = None):
        self.logger = logging.getLogger(f"{ROOT_LOGGER}.{name}")
        try:
            resolved = _resolve_level(level if level is not None else get_default_log_level())
        except ValueError:
            # a bad MOTIFCLUST_LOG_LEVEL surfaces through set_log_level in the CLI
            resolved = logging.WARNING
        self.logger.setLevel(resolved)

        # stdout carries CSV/JSON results
        if not self.logger.handlers:
            handler = logging.StreamHandler(sys.stderr)
            handler.setFormatter(logging.Formatter(
                '%(asctime)s - %(name)s - %(levelname)s - %(message)s',
                datefmt='%Y-%m-%d %H:%M:%S'
            ))
            self.logger.addHandler(handler)
            self.logger.propagate = False

    def debug(self, msg: str, **kwargs):
        self.logger.debug(msg, extra=kwargs)

    def info(self, msg: str, **kwargs):
        self.logger.info(msg, extra=kwargs)

    def warning(self, msg: str, **kwargs):
        self.logger.warning(msg, extra=kwargs)


@lru_cache(maxsize=None)
def get_logger(name: str) -> MotifClustLogger:
    """Get or create the logger for one module, e.g. get_logger("cluster.pipeline")."""
    return MotifClustLogger(name)


def set_log_level(level: Union[int, str]) -> int:
    """Set the level of every motifclust logger; returns the numeric level."""
    numeric = _resolve_level(level)
    logging.getLogger(ROOT_LOGGER).setLevel(numeric)
    for name in list(logging.root.manager.loggerDict):
        if name.startswith(f"{ROOT_LOGGER}."):
            logging.getLogger(name).setLevel(numeric)
    return numeric
