"""Request/response models of the HTTP API, and their builders.

The JSON report is the canonical serialization of an assessment; the CLI
and the web UI both consume it unchanged. Scores are emitted at full
precision; rounding is left to presentation layers.
"""

from __future__ import annotations

from typing import Optional

from pydantic import BaseModel, Field

from ..engine import AssessmentService
from ..evaluation import Assessment, EvaluationContext, TestResult
from ..identifiers import IdentifierRef
from ..registry import Indicator


class EvaluationRequest(BaseModel):
    id: str = Field(min_length=1, description="Identifier of the digital object (DOI, Handle or URL)")
    repo: str = Field(min_length=1, description="Plugin id of the repository to evaluate against")
    lang: str = Field(default="en", description="Locale for feedback texts")


class EvidenceItem(BaseModel):
    name: str
    value: str


class SubjectInfo(BaseModel):
    raw: str
    kind: str
    normalized: str
    resolver_url: Optional[str] = None


class IndicatorBlock(BaseModel):
    indicator: str
    name: str
    group: str
    level: str
    weight: float
    points: float
    assessment: str
    technical_implementation: str
    technical_feedback: str
    tips: str
    dependency: str
    evidence: list[EvidenceItem]


class EvaluationReport(BaseModel):
    subject: SubjectInfo
    plugin: str
    locale: str
    total_score: float
    group_scores: dict[str, float]
    indicators: list[IndicatorBlock]
    started_at: str
    finished_at: str


class SingleIndicatorReport(BaseModel):
    subject: SubjectInfo
    plugin: str
    locale: str
    result: IndicatorBlock
    started_at: str
    finished_at: str


class HealthInfo(BaseModel):
    status: str
    version: str


def subject_info(subject: IdentifierRef) -> SubjectInfo:
    return SubjectInfo(
        raw=subject.raw,
        kind=subject.kind.value,
        normalized=subject.normalized,
        resolver_url=subject.resolver_url,
    )


def indicator_block(
    indicator: Indicator,
    result: TestResult,
    weight: float,
    name: str,
) -> IndicatorBlock:
    return IndicatorBlock(
        indicator=indicator.id,
        name=name or indicator.description,
        group=indicator.group.value,
        level=indicator.priority.value,
        weight=weight,
        points=result.points,
        assessment=indicator.description,
        technical_implementation=result.implementation_note,
        technical_feedback=result.technical_feedback,
        tips=result.tips,
        dependency=indicator.dependency.value,
        evidence=[EvidenceItem(name=name_, value=value) for name_, value in result.evidence],
    )


def build_report(service: AssessmentService, assessment: Assessment) -> EvaluationReport:
    catalog = service.catalog(assessment.locale, assessment.plugin_id)
    weights = service.weights_for(assessment.plugin_id)
    blocks = []
    for indicator in service.registry:
        result = assessment.results[indicator.id]
        name, _ = catalog.lookup(indicator.config_key, "name")
        blocks.append(indicator_block(indicator, result, weights[indicator.id], name))
    return EvaluationReport(
        subject=subject_info(assessment.subject),
        plugin=assessment.plugin_id,
        locale=assessment.locale,
        total_score=assessment.total_score,
        group_scores={group.value: score for group, score in assessment.group_scores.items()},
        indicators=blocks,
        started_at=assessment.started_at.isoformat(),
        finished_at=assessment.finished_at.isoformat(),
    )


def build_single_report(
    service: AssessmentService,
    indicator_id: str,
    result: TestResult,
    context: EvaluationContext,
    plugin_id: str,
    locale: str,
    started_at: str,
    finished_at: str,
) -> SingleIndicatorReport:
    indicator = service.registry.get(indicator_id)
    catalog = service.catalog(locale, plugin_id)
    name, _ = catalog.lookup(indicator.config_key, "name")
    weight = service.weights_for(plugin_id)[indicator.id]
    return SingleIndicatorReport(
        subject=subject_info(context.subject),
        plugin=plugin_id,
        locale=locale,
        result=indicator_block(indicator, result, weight, name),
        started_at=started_at,
        finished_at=finished_at,
    )
