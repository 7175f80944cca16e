"""Catalog of RDA FAIR maturity indicators and their scoring weights.

The default registry ships as a TSV data file with one row per indicator
(41 in the RDA FAIR Data Maturity Model). Each indicator carries a
priority level (Essential, Important, Useful) whose default weight is
2.0, 1.5 and 1.0 respectively; deployments can override single weights,
but a registry is immutable once loaded.
"""

from __future__ import annotations

import csv
import re
from dataclasses import dataclass, field
from enum import Enum
from importlib import resources
from typing import Iterable, Mapping, Optional

from .errors import NonPositiveWeight, UnknownIndicator, UnknownIndicatorKey


class PrincipleGroup(str, Enum):
    FINDABLE = "F"
    ACCESSIBLE = "A"
    INTEROPERABLE = "I"
    REUSABLE = "R"


class PriorityLevel(str, Enum):
    ESSENTIAL = "Essential"
    IMPORTANT = "Important"
    USEFUL = "Useful"

    @property
    def default_weight(self) -> float:
        return _DEFAULT_WEIGHTS[self]


_DEFAULT_WEIGHTS = {
    PriorityLevel.ESSENTIAL: 2.0,
    PriorityLevel.IMPORTANT: 1.5,
    PriorityLevel.USEFUL: 1.0,
}


class IndicatorTarget(str, Enum):
    METADATA = "M"
    DATA = "D"


class DependencyClass(str, Enum):
    """Who can act on a failing indicator: the repository or the data creator."""

    REPOSITORY = "repository"
    METADATA = "metadata"


# Canonical id, e.g. RDA-F1-01M or RDA-A1.1-01D. The sub-principle may
# itself contain a dotted minor part (A1.1, R1.3).
_CANONICAL_RE = re.compile(r"^RDA-([FAIR])(\d+(?:\.\d+)?)-(\d{2})([MD])$")

# Accepts any separator mix of '-', '.' and '_' between the token parts,
# case-insensitively, e.g. "rda_f1_01m" or "RDA-F1.01M".
_TOKEN_RE = re.compile(r"^rda[-._]", re.IGNORECASE)
_FINAL_RE = re.compile(r"^(\d{2})([MDmd])$")


def to_config_key(indicator_id: str) -> str:
    """Lowercase underscore form of a canonical id: RDA-A1.1-01M -> rda_a1_1_01m."""
    return indicator_id.lower().replace("-", "_").replace(".", "_")


def normalize_indicator_id(value: str) -> str:
    """Return the canonical hyphenated id for any accepted spelling.

    Handles config keys (rda_f1_01m), dotted variants (RDA-F1.01M) and
    case differences. Raises UnknownIndicatorKey if the string does not
    follow the indicator id shape at all.
    """
    text = value.strip()
    if not _TOKEN_RE.match(text):
        raise UnknownIndicatorKey(f"not an indicator id: {value!r}")
    tokens = re.split(r"[-._]", text)[1:]
    if len(tokens) < 2:
        raise UnknownIndicatorKey(f"not an indicator id: {value!r}")
    final = _FINAL_RE.match(tokens[-1])
    head = tokens[0]
    middle = tokens[1:-1]
    if (
        final is None
        or not re.match(r"^[FAIRfair]\d+$", head)
        or not all(re.match(r"^\d+$", part) for part in middle)
    ):
        raise UnknownIndicatorKey(f"not an indicator id: {value!r}")
    sub_principle = ".".join([head.upper(), *middle])
    return f"RDA-{sub_principle}-{final.group(1)}{final.group(2).upper()}"


@dataclass(frozen=True)
class Indicator:
    id: str
    group: PrincipleGroup
    sub_principle: str
    target: IndicatorTarget
    priority: PriorityLevel
    dependency: DependencyClass
    automation: str  # "full" or "proxy", drives the semantic-export mapping
    description: str

    @property
    def config_key(self) -> str:
        return to_config_key(self.id)

    def __post_init__(self) -> None:
        match = _CANONICAL_RE.match(self.id)
        if match is None:
            raise ValueError(f"malformed indicator id: {self.id!r}")
        if match.group(1) != self.group.value:
            raise ValueError(f"{self.id}: group letter disagrees with {self.group}")
        if match.group(4) != self.target.value:
            raise ValueError(f"{self.id}: id suffix disagrees with target {self.target}")


@dataclass(frozen=True)
class IndicatorRegistry:
    """Immutable, ordered indicator catalog plus the active weight map."""

    indicators: tuple[Indicator, ...]
    weights: Mapping[str, float] = field(default_factory=dict)  # config_key -> weight

    def __post_init__(self) -> None:
        seen = set()
        for indicator in self.indicators:
            if indicator.id in seen:
                raise ValueError(f"duplicate indicator id: {indicator.id}")
            seen.add(indicator.id)
        for key, weight in self.weights.items():
            if key not in {i.config_key for i in self.indicators}:
                raise UnknownIndicatorKey(key)
            if not weight > 0:
                raise NonPositiveWeight(f"{key}: {weight}")

    def __len__(self) -> int:
        return len(self.indicators)

    def __iter__(self):
        return iter(self.indicators)

    def get(self, indicator_id: str) -> Indicator:
        canonical = normalize_indicator_id(indicator_id)
        for indicator in self.indicators:
            if indicator.id == canonical:
                return indicator
        raise UnknownIndicator(indicator_id)

    def __contains__(self, indicator_id: str) -> bool:
        try:
            self.get(indicator_id)
        except (UnknownIndicator, UnknownIndicatorKey):
            return False
        return True

    def weight(self, indicator_id: str) -> float:
        return self.weights[self.get(indicator_id).config_key]

    def config_keys(self) -> list[str]:
        return [indicator.config_key for indicator in self.indicators]


def _read_indicator_rows() -> Iterable[dict]:
    data = resources.files("fairmeter.data").joinpath("indicators.tsv").read_text("utf-8")
    return csv.DictReader(data.splitlines(), delimiter="\t")


def load_registry(
    weight_overrides: Optional[Mapping[str, float]] = None,
) -> IndicatorRegistry:
    """Build the default registry, then merge any per-indicator weight overrides.

    Override keys may use any accepted id spelling; they must reference a
    registry indicator and be strictly positive.
    """
    indicators = tuple(
        Indicator(
            id=row["id"],
            group=PrincipleGroup(row["group"]),
            sub_principle=row["sub_principle"],
            target=IndicatorTarget(row["target"]),
            priority=PriorityLevel(row["priority"]),
            dependency=DependencyClass(row["dependency"]),
            automation=row["automation"],
            description=row["description"],
        )
        for row in _read_indicator_rows()
    )
    weights = {i.config_key: i.priority.default_weight for i in indicators}
    if weight_overrides:
        for raw_key, value in weight_overrides.items():
            key = to_config_key(normalize_indicator_id(raw_key))
            if key not in weights:
                raise UnknownIndicatorKey(raw_key)
            if not value > 0:
                raise NonPositiveWeight(f"{raw_key}: {value}")
            weights[key] = float(value)
    return IndicatorRegistry(indicators=indicators, weights=weights)


def indicators_by_group(
    registry: IndicatorRegistry, group: PrincipleGroup
) -> list[Indicator]:
    """All indicators of one principle group, in registry order."""
    return [indicator for indicator in registry if indicator.group == group]


def classify_indicator_dependency(
    registry: IndicatorRegistry, indicator_id: str
) -> DependencyClass:
    """Whether a failing indicator is the repository's to fix or the data creator's."""
    return registry.get(indicator_id).dependency
