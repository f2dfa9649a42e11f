"""Custom exceptions for motifclust."""

from typing import Any, Dict, Optional


class MotifClustError(Exception):
    """Base exception for all motifclust errors."""

    exit_code: int = 1

    def __init__(self, message: str, code: Optional[str] = None, **kwargs: Any):
        super().__init__(message)
        self.message = message
        self.code = code or "MOTIFCLUST_ERROR"
        self.details: Dict[str, Any] = dict(kwargs)

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary."""
        return {"error": self.code, "message": self.message, **self.details}


class ConfigurationError(MotifClustError):
    """Raised when a run configuration is invalid or incomplete."""

    def __init__(self, message: str = "Configuration error", code: str = "CONFIG_ERROR", **kwargs):
        super().__init__(message, code=code, **kwargs)


class ValidationError(MotifClustError):
    """Raised when an operation receives arguments it cannot work with."""

    def __init__(self, message: str = "Invalid arguments", code: str = "VALIDATION_ERROR", **kwargs):
        super().__init__(message, code=code, **kwargs)


class SizeLimitError(ValidationError):
    """Raised when an all-pairs computation is refused by its node-count guard."""

    def __init__(self, node_count: int, node_limit: int, **kwargs):
        self.node_count = node_count
        self.node_limit = node_limit
        message = (
            f"graph has {node_count} nodes, above the node_limit of {node_limit} "
            "for exact edge betweenness"
        )
        super().__init__(message, code="SIZE_LIMIT", **kwargs)
        self.details["node_count"] = node_count
        self.details["node_limit"] = node_limit


class InputError(MotifClustError):
    """Raised when an input file is missing or unreadable."""

    exit_code = 2

    def __init__(self, path: str, reason: str = "cannot read file", **kwargs):
        self.path = str(path)
        super().__init__(f"{reason}: {self.path}", code="INPUT_ERROR", **kwargs)
        self.details["path"] = self.path


class GraphFormatError(MotifClustError):
    """Raised when an edge-list or community file contains a malformed line."""

    exit_code = 3

    def __init__(self, message: str, path: Optional[str] = None, line: Optional[int] = None, **kwargs):
        self.path = None if path is None else str(path)
        self.line = line
        where = ""
        if self.path is not None:
            where = f"{self.path}:{line}: " if line is not None else f"{self.path}: "
        elif line is not None:
            where = f"line {line}: "
        super().__init__(f"{where}{message}", code="FORMAT_ERROR", **kwargs)
        self.details["path"] = self.path
        self.details["line"] = line


__all__ = [
    # Base error
    "MotifClustError",
    # Usage and config
    "ConfigurationError",
    "ValidationError",
    "SizeLimitError",
    # Files
    "InputError",
    "GraphFormatError",
]
