"""Full-assessment orchestration: harvest, run every test, score, localize.

AssessmentService owns only read-only state (registry, plugin instances,
catalog cache), so concurrent evaluations never share mutable data: each
call builds its own context and session.
"""

from __future__ import annotations

from datetime import datetime, timezone
from importlib import resources
from pathlib import Path
from typing import Mapping, Optional

from . import feedback, scoring
from .errors import NonPositiveWeight, UnknownPlugin
from .evaluation import Assessment, EvaluationContext, GenericEvaluator, TestResult
from .harvest import HarvestSession
from .identifiers import resolve_identifier
from .registry import IndicatorRegistry
from .feedback import FeedbackCatalog


def packaged_translations_dir() -> Path:
    return Path(str(resources.files("fairmeter").joinpath("translations")))


class AssessmentService:
    def __init__(
        self,
        registry: IndicatorRegistry,
        plugins: Mapping[str, GenericEvaluator],
        translations_dir: Optional[Path | str] = None,
    ):
        self.registry = registry
        self.plugins = dict(plugins)
        self.translations_dir = Path(translations_dir) if translations_dir else packaged_translations_dir()
        self._catalogs: dict[tuple[str, str], FeedbackCatalog] = {}
        self._weights: dict[str, dict[str, float]] = {}

    def plugin(self, plugin_id: str) -> GenericEvaluator:
        try:
            return self.plugins[plugin_id]
        except KeyError:
            raise UnknownPlugin(plugin_id) from None

    def weights_for(self, plugin_id: str) -> dict[str, float]:
        """Active weights keyed by canonical id: registry defaults, then the
        plugin's own overrides."""
        if plugin_id not in self._weights:
            plugin = self.plugin(plugin_id)
            weights = {i.id: self.registry.weights[i.config_key] for i in self.registry}
            for raw_key, value in plugin.config.weight_overrides.items():
                canonical = self.registry.get(raw_key).id
                if not value > 0:
                    raise NonPositiveWeight(f"{raw_key}: {value}")
                weights[canonical] = float(value)
            self._weights[plugin_id] = weights
        return self._weights[plugin_id]

    def catalog(self, locale: str, plugin_id: str) -> FeedbackCatalog:
        """Locale catalog with the plugin's own texts, if any, layered on top."""
        cache_key = (locale, plugin_id)
        if cache_key not in self._catalogs:
            base = feedback.load_catalog(self.translations_dir, locale, self.registry)
            entries = dict(base.entries)
            fallback_entries = dict(base.fallback_entries or {})
            overlay_dir = self.translations_dir / plugin_id
            if overlay_dir.is_dir():
                overlay = feedback.load_catalog(overlay_dir, locale, self.registry)
                fallback_entries.update(overlay.fallback_entries or {})
                entries.update(overlay.entries)
            self._catalogs[cache_key] = FeedbackCatalog(
                locale=locale,
                entries=entries,
                fallback_locale=base.fallback_locale,
                fallback_entries=fallback_entries,
            )
        return self._catalogs[cache_key]

    def build_context(
        self, plugin: GenericEvaluator, identifier: str, locale: str
    ) -> EvaluationContext:
        subject = resolve_identifier(identifier)
        with HarvestSession(plugin.config) as session:
            bundle = plugin.get_metadata(subject, session)
        return EvaluationContext(
            subject=subject,
            metadata=bundle.record,
            landing_links=bundle.landing_links,
            oai_formats=bundle.record.available_formats,
            plugin_config=plugin.config,
            locale=locale,
            landing_status=bundle.landing_status,
            oai_reachable=bundle.oai_reachable,
            harvest_notes=bundle.notes,
        )

    def run_all(
        self, plugin: GenericEvaluator, context: EvaluationContext, locale: str
    ) -> dict[str, TestResult]:
        catalog = self.catalog(locale, plugin.plugin_id)
        results = {}
        for indicator in self.registry:
            result = plugin.run_test(context, indicator.id)
            results[indicator.id] = feedback.render(result, catalog)
        return results

    def evaluate(self, identifier: str, plugin_id: str, locale: str = "en") -> Assessment:
        """Assess one digital object: all indicators, scored and localized."""
        plugin = self.plugin(plugin_id)
        started = datetime.now(timezone.utc)
        context = self.build_context(plugin, identifier, locale)
        results = self.run_all(plugin, context, locale)
        points = {indicator_id: result.points for indicator_id, result in results.items()}
        weights = self.weights_for(plugin_id)
        parts = scoring.breakdown(
            points, weights, self.registry, excluded=plugin.config.excluded_indicators
        )
        return Assessment(
            subject=context.subject,
            plugin_id=plugin_id,
            results=results,
            group_scores=parts.per_group,
            total_score=parts.total,
            started_at=started,
            finished_at=datetime.now(timezone.utc),
            locale=locale,
        )

    def evaluate_single(
        self, identifier: str, indicator_id: str, plugin_id: str, locale: str = "en"
    ) -> tuple[TestResult, EvaluationContext]:
        """Run one indicator test over a freshly assembled context."""
        plugin = self.plugin(plugin_id)
        indicator = self.registry.get(indicator_id)  # raises UnknownIndicator
        context = self.build_context(plugin, identifier, locale)
        result = plugin.run_test(context, indicator.id)
        return feedback.render(result, self.catalog(locale, plugin.plugin_id)), context
