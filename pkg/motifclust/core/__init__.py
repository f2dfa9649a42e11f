"""Core module with types and exceptions."""

from .exceptions import (
    ConfigurationError,
    GraphFormatError,
    InputError,
    MotifClustError,
    SizeLimitError,
    ValidationError,
)
from .types import (
    CommunitySet,
    Partition,
    SelectionRule,
    SimilarityKind,
    canonical_labels,
)

__all__ = [
    "SimilarityKind",
    "SelectionRule",
    "Partition",
    "CommunitySet",
    "canonical_labels",
    "MotifClustError",
    "ConfigurationError",
    "ValidationError",
    "SizeLimitError",
    "InputError",
    "GraphFormatError",
]
