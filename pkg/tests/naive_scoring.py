"""Independent scoring oracle: plain accumulator loop, no shared code.

Kept deliberately separate from the package implementation so weighted
scores can be cross-checked against a second, naive computation.
"""

from __future__ import annotations


def naive_total(points: dict[str, float], weights: dict[str, float]) -> float:
    numerator = 0.0
    denominator = 0.0
    for key in points:
        numerator += points[key] * weights[key]
        denominator += weights[key]
    return numerator / denominator


def naive_group_scores(
    points: dict[str, float],
    weights: dict[str, float],
    group_of: dict[str, str],
) -> dict[str, float]:
    sums: dict[str, list[float]] = {}
    for key in points:
        group = group_of[key]
        accumulator = sums.setdefault(group, [0.0, 0.0])
        accumulator[0] += points[key] * weights[key]
        accumulator[1] += weights[key]
    return {group: numerator / denominator for group, (numerator, denominator) in sums.items()}
