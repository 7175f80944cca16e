"""Automated FAIR-compliance assessment for repository-held digital objects."""

__version__ = "0.1.0"

from .identifiers import IdentifierKind, IdentifierRef, resolve_identifier
from .registry import (
    Indicator,
    IndicatorRegistry,
    PrincipleGroup,
    PriorityLevel,
    indicators_by_group,
    load_registry,
)

__all__ = [
    "Indicator",
    "IndicatorRegistry",
    "IdentifierKind",
    "IdentifierRef",
    "PrincipleGroup",
    "PriorityLevel",
    "__version__",
    "indicators_by_group",
    "load_registry",
    "resolve_identifier",
]
