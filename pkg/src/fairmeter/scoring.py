"""Weighted aggregation of indicator points into group and total scores.

The total is the weight-normalized mean sum(P_i * W_i) / sum(W_i), with
per-group scores computed by the same rule restricted to each principle
group. math.fsum keeps results independent of summation order.

Indicators excluded by configuration are removed from both numerator and
denominator: exclusion means "not assessed", never "scored zero".
"""

from __future__ import annotations

import math
from collections.abc import Collection, Mapping
from dataclasses import dataclass

from .errors import EmptyInput, KeyMismatch, NonPositiveWeight
from .registry import IndicatorRegistry, PrincipleGroup


@dataclass(frozen=True)
class ScoreBreakdown:
    total: float
    per_group: Mapping[PrincipleGroup, float]
    per_indicator: Mapping[str, tuple[float, float, float]]  # id -> (points, weight, contribution)


def _validate(points: Mapping[str, float], weights: Mapping[str, float]) -> None:
    if not points:
        raise EmptyInput("no indicators to score")
    if set(points) != set(weights):
        missing = set(points) ^ set(weights)
        raise KeyMismatch(f"points/weights key sets differ: {sorted(missing)}")
    for key, weight in weights.items():
        if not weight > 0:
            raise NonPositiveWeight(f"{key}: {weight}")
    for key, value in points.items():
        if not 0.0 <= value <= 100.0:
            raise ValueError(f"points out of range for {key}: {value}")


def total_score(points: Mapping[str, float], weights: Mapping[str, float]) -> float:
    """Weighted mean of points over identical, non-empty key sets."""
    _validate(points, weights)
    keys = sorted(points)
    numerator = math.fsum(points[k] * weights[k] for k in keys)
    denominator = math.fsum(weights[k] for k in keys)
    return numerator / denominator


def group_scores(
    points: Mapping[str, float],
    weights: Mapping[str, float],
    registry: IndicatorRegistry,
) -> dict[PrincipleGroup, float]:
    """The same weighted mean per principle group, using the registry partition.

    Keys of `points` may be canonical ids or config keys. A group left with
    no scored indicators raises EmptyInput.
    """
    _validate(points, weights)
    by_group: dict[PrincipleGroup, dict[str, float]] = {g: {} for g in PrincipleGroup}
    for key in points:
        by_group[registry.get(key).group][key] = points[key]
    result = {}
    for group, members in by_group.items():
        if not members:
            raise EmptyInput(f"no scored indicators in group {group.value}")
        result[group] = total_score(members, {k: weights[k] for k in members})
    return result


def breakdown(
    points: Mapping[str, float],
    weights: Mapping[str, float],
    registry: IndicatorRegistry,
    excluded: Collection[str] = (),
) -> ScoreBreakdown:
    """Full score decomposition, with configured exclusions removed entirely."""
    excluded_ids = {registry.get(key).id for key in excluded}
    kept_points = {k: v for k, v in points.items() if registry.get(k).id not in excluded_ids}
    kept_weights = {k: weights[k] for k in kept_points}
    total = total_score(kept_points, kept_weights)
    denominator = math.fsum(kept_weights.values())
    per_indicator = {
        key: (kept_points[key], kept_weights[key], kept_points[key] * kept_weights[key] / denominator)
        for key in sorted(kept_points)
    }
    return ScoreBreakdown(
        total=total,
        per_group=group_scores(kept_points, kept_weights, registry),
        per_indicator=per_indicator,
    )


def weights_scale_invariant(
    points: Mapping[str, float],
    weights: Mapping[str, float],
    factor: float,
    tolerance: float = 1e-9,
) -> bool:
    """Check that rescaling all weights by factor > 0 leaves the total unchanged."""
    if not factor > 0:
        raise ValueError("scale factor must be positive")
    scaled = {k: w * factor for k, w in weights.items()}
    return abs(total_score(points, weights) - total_score(points, scaled)) <= tolerance
