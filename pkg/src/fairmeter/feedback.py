"""Localized per-indicator feedback texts, merged into test results.

Catalogs are flat `key = value` files, one per locale, under a
translations directory. Keys are `<config_key>.<field>` with field one
of tips, technical or name. Values are UTF-8 with `\\n` escapes.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from pathlib import Path
from typing import Mapping

from .errors import MalformedEntry, MissingLocaleFile
from .evaluation import TestResult
from .registry import IndicatorRegistry, to_config_key

FIELDS = ("tips", "technical", "name")
FALLBACK_LOCALE = "en"


@dataclass(frozen=True)
class FeedbackCatalog:
    locale: str
    entries: Mapping[str, str]
    fallback_locale: str = FALLBACK_LOCALE
    fallback_entries: Mapping[str, str] = None  # type: ignore[assignment]

    def lookup(self, config_key: str, field: str) -> tuple[str, bool]:
        """Text for one indicator field, and whether it came from the fallback."""
        key = f"{config_key}.{field}"
        if key in self.entries:
            return self.entries[key], False
        if self.fallback_entries and key in self.fallback_entries:
            return self.fallback_entries[key], True
        return "", False


def _split_key(key: str, registry: IndicatorRegistry) -> tuple[str, str]:
    config_key, _, field = key.rpartition(".")
    if field not in FIELDS:
        raise MalformedEntry(f"unknown field {field!r} in key {key!r}")
    if config_key not in {i.config_key for i in registry}:
        raise MalformedEntry(f"unknown indicator key {config_key!r} in key {key!r}")
    return config_key, field


def parse_catalog_file(path: Path, registry: IndicatorRegistry) -> dict[str, str]:
    entries: dict[str, str] = {}
    for number, line in enumerate(path.read_text("utf-8").splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if "=" not in stripped:
            raise MalformedEntry(f"{path.name}:{number}: expected 'key = value'")
        key, _, value = stripped.partition("=")
        key = key.strip()
        _split_key(key, registry)
        entries[key] = value.strip().replace("\\n", "\n")
    return entries


def load_catalog(
    directory: Path | str,
    locale: str,
    registry: IndicatorRegistry,
    fallback_locale: str = FALLBACK_LOCALE,
) -> FeedbackCatalog:
    """Load `<locale>.properties` from a directory, wiring in the fallback locale."""
    directory = Path(directory)
    requested = directory / f"{locale}.properties"
    fallback = directory / f"{fallback_locale}.properties"
    if not requested.exists() and not fallback.exists():
        raise MissingLocaleFile(f"no catalog for {locale!r} nor fallback {fallback_locale!r} in {directory}")
    fallback_entries = parse_catalog_file(fallback, registry) if fallback.exists() else {}
    if requested.exists():
        entries = parse_catalog_file(requested, registry)
    else:
        entries = {}
    return FeedbackCatalog(
        locale=locale,
        entries=entries,
        fallback_locale=fallback_locale,
        fallback_entries=fallback_entries,
    )


def missing_tips(catalog_entries: Mapping[str, str], registry: IndicatorRegistry) -> list[str]:
    """Registry config keys that lack a `.tips` entry in the given entries map.

    Run against each shipped locale; the fallback locale must come back empty.
    """
    return [
        indicator.config_key
        for indicator in registry
        if f"{indicator.config_key}.tips" not in catalog_entries
    ]


def render(result: TestResult, catalog: FeedbackCatalog) -> TestResult:
    """Attach localized tips to a test result, preserving evidence.

    Full-score results carry empty tips (nothing to improve); feedback is
    backfilled from the catalog when the test produced none. Idempotent.
    """
    config_key = to_config_key(result.indicator_id)
    tips = ""
    if result.points < 100.0:
        tips, _ = catalog.lookup(config_key, "tips")
    technical = result.technical_feedback
    if not technical:
        technical, _ = catalog.lookup(config_key, "technical")
    return replace(result, tips=tips, technical_feedback=technical)
