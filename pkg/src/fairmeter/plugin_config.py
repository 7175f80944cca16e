"""Repository plugin configuration: INI sections, one per plugin id.

List-valued keys hold comma-separated values; weight_overrides entries
are `config_key:value` pairs. Absent keys fall back to defaults that
match a Dublin-Core-based institutional repository.
"""

from __future__ import annotations

import configparser
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Mapping, Optional

from .errors import MalformedValue, MissingSection, ValidationError

DEFAULT_IDENTIFIER_TERMS = ("dc.identifier.uri", "dc.identifier.doi")
DEFAULT_DATA_IDENTIFIER_TERMS = (
    "dc.identifier.uri",
    "dc.identifier.doi",
    "dc.relation.publisherversion",
)
DEFAULT_ACCESS_TERMS = ("dc.rights",)
DEFAULT_ACCESS_INFO_TERMS = ("dc.description",)
DEFAULT_LICENSE_TERMS = ("dc.rights.license",)
DEFAULT_RELATION_TERMS = ("dc.relation",)
DEFAULT_PROVENANCE_TERMS = ("dc.description.provenance", "dc.contributor")
DEFAULT_MANDATORY_TERMS = (
    "dc.contributor.author",
    "dc.title",
    "dc.date.issued",
    "dc.type",
    "dc.identifier.uri",
    "dc.rights",
    "dc.language.iso",
)
DEFAULT_RICHNESS_TARGET = 20

# URI prefixes of widely used controlled vocabularies (Getty AAT/TGN,
# UNESCO thesaurus, Library of Congress, EU Vocabularies, Wikidata).
DEFAULT_VOCABULARY_PREFIXES = (
    "http://vocab.getty.edu/",
    "https://vocab.getty.edu/",
    "http://vocabularies.unesco.org/",
    "https://vocabularies.unesco.org/",
    "http://id.loc.gov/",
    "https://id.loc.gov/",
    "http://publications.europa.eu/resource/authority/",
    "http://www.wikidata.org/entity/",
    "https://www.wikidata.org/entity/",
)

# metadata formats accepted as community standards on OAI-PMH endpoints
DEFAULT_COMMUNITY_STANDARDS = (
    "oai_dc",
    "qdc",
    "dim",
    "rdf",
    "datacite",
    "oai_datacite",
    "oai_openaire",
    "marcxml",
    "mods",
)

# OAI-PMH format prefixes whose payloads are RDF-bearing
DEFAULT_RDF_PREFIXES = ("rdf", "oai_openaire", "datacite")

DEFAULT_STANDARD_LICENSE_PREFIXES = (
    "https://creativecommons.org/",
    "http://creativecommons.org/",
    "https://opensource.org/licenses/",
    "https://spdx.org/licenses/",
    "https://www.gnu.org/licenses/",
    "http://www.opendatacommons.org/licenses/",
    "https://opendatacommons.org/licenses/",
)


@dataclass(frozen=True)
class PluginConfig:
    plugin_id: str
    oai_endpoint: str = ""
    landing_url_template: str = ""
    identifier_terms: tuple[str, ...] = DEFAULT_IDENTIFIER_TERMS
    data_identifier_terms: tuple[str, ...] = DEFAULT_DATA_IDENTIFIER_TERMS
    access_terms: tuple[str, ...] = DEFAULT_ACCESS_TERMS
    access_info_terms: tuple[str, ...] = DEFAULT_ACCESS_INFO_TERMS
    license_terms: tuple[str, ...] = DEFAULT_LICENSE_TERMS
    relation_terms: tuple[str, ...] = DEFAULT_RELATION_TERMS
    provenance_terms: tuple[str, ...] = DEFAULT_PROVENANCE_TERMS
    mandatory_terms: tuple[str, ...] = DEFAULT_MANDATORY_TERMS
    mandatory_terms_by_type: Mapping[str, tuple[str, ...]] = field(default_factory=dict)
    vocabulary_url_patterns: tuple[str, ...] = DEFAULT_VOCABULARY_PREFIXES
    standard_vocabularies: tuple[str, ...] = DEFAULT_VOCABULARY_PREFIXES
    community_standards: tuple[str, ...] = DEFAULT_COMMUNITY_STANDARDS
    rdf_format_prefixes: tuple[str, ...] = DEFAULT_RDF_PREFIXES
    standard_licenses: tuple[str, ...] = DEFAULT_STANDARD_LICENSE_PREFIXES
    richness_target: int = DEFAULT_RICHNESS_TARGET
    preservation_policy_url: Optional[str] = None
    metadata_api_template: Optional[str] = None
    oai_metadata_prefix: Optional[str] = None
    oai_identifier_template: str = "{id}"
    excluded_indicators: tuple[str, ...] = ()
    weight_overrides: Mapping[str, float] = field(default_factory=dict)
    connect_timeout: float = 10.0
    total_timeout: float = 30.0
    evaluator: str = "generic"  # which evaluator class serves this plugin

    def __post_init__(self) -> None:
        if not self.identifier_terms:
            raise ValidationError(f"[{self.plugin_id}] identifier_terms must not be empty")
        if self.landing_url_template and self.landing_url_template.count("{id}") != 1:
            raise ValidationError(
                f"[{self.plugin_id}] landing_url_template needs exactly one {{id}} placeholder"
            )
        if self.richness_target <= 0:
            raise ValidationError(f"[{self.plugin_id}] richness_target must be positive")

    def mandatory_terms_for(self, resource_type: Optional[str]) -> tuple[str, ...]:
        if resource_type:
            specific = self.mandatory_terms_by_type.get(resource_type.strip().lower())
            if specific:
                return specific
        return self.mandatory_terms


def _csv_list(value: str) -> tuple[str, ...]:
    return tuple(item.strip() for item in value.split(",") if item.strip())


def _weight_map(value: str, section: str) -> dict[str, float]:
    overrides: dict[str, float] = {}
    for entry in _csv_list(value):
        key, sep, number = entry.partition(":")
        if not sep:
            raise MalformedValue(f"[{section}] weight_overrides entry {entry!r} is not key:value")
        try:
            overrides[key.strip()] = float(number)
        except ValueError as exc:
            raise MalformedValue(f"[{section}] weight {entry!r}: {exc}") from exc
    return overrides


def load_plugin_config(path: Path | str, plugin_id: str) -> PluginConfig:
    """Read one plugin section from an INI file and validate it."""
    parser = configparser.ConfigParser(interpolation=None)
    try:
        read = parser.read(str(path), encoding="utf-8")
    except configparser.Error as exc:
        raise MalformedValue(f"{path}: {exc}") from exc
    if not read:
        raise MissingSection(f"config file not found: {path}")
    if plugin_id not in parser:
        raise MissingSection(f"no [{plugin_id}] section in {path}")
    section = parser[plugin_id]

    def lst(key: str, default: tuple[str, ...]) -> tuple[str, ...]:
        raw = section.get(key)
        return _csv_list(raw) if raw is not None else default

    try:
        richness = section.getint("richness_target", DEFAULT_RICHNESS_TARGET)
        connect_timeout = section.getfloat("connect_timeout", 10.0)
        total_timeout = section.getfloat("total_timeout", 30.0)
    except ValueError as exc:
        raise MalformedValue(f"[{plugin_id}]: {exc}") from exc

    by_type = {}
    for key in section:
        if key.startswith("mandatory_terms."):
            by_type[key.split(".", 1)[1]] = _csv_list(section[key])

    return PluginConfig(
        plugin_id=plugin_id,
        oai_endpoint=section.get("oai_endpoint", "").strip(),
        landing_url_template=section.get("landing_url_template", "").strip(),
        identifier_terms=lst("identifier_terms", DEFAULT_IDENTIFIER_TERMS),
        data_identifier_terms=lst("data_identifier_terms", DEFAULT_DATA_IDENTIFIER_TERMS),
        access_terms=lst("access_terms", DEFAULT_ACCESS_TERMS),
        access_info_terms=lst("access_info_terms", DEFAULT_ACCESS_INFO_TERMS),
        license_terms=lst("license_terms", DEFAULT_LICENSE_TERMS),
        relation_terms=lst("relation_terms", DEFAULT_RELATION_TERMS),
        provenance_terms=lst("provenance_terms", DEFAULT_PROVENANCE_TERMS),
        mandatory_terms=lst("mandatory_terms", DEFAULT_MANDATORY_TERMS),
        mandatory_terms_by_type=by_type,
        vocabulary_url_patterns=lst("vocabulary_url_patterns", DEFAULT_VOCABULARY_PREFIXES),
        standard_vocabularies=lst("standard_vocabularies", DEFAULT_VOCABULARY_PREFIXES),
        community_standards=lst("community_standards", DEFAULT_COMMUNITY_STANDARDS),
        rdf_format_prefixes=lst("rdf_format_prefixes", DEFAULT_RDF_PREFIXES),
        standard_licenses=lst("standard_licenses", DEFAULT_STANDARD_LICENSE_PREFIXES),
        richness_target=richness,
        preservation_policy_url=section.get("preservation_policy_url", "").strip() or None,
        metadata_api_template=section.get("metadata_api_template", "").strip() or None,
        oai_metadata_prefix=section.get("oai_metadata_prefix", "").strip() or None,
        oai_identifier_template=section.get("oai_identifier_template", "{id}").strip(),
        excluded_indicators=lst("excluded_indicators", ()),
        weight_overrides=_weight_map(section.get("weight_overrides", ""), plugin_id),
        connect_timeout=connect_timeout,
        total_timeout=total_timeout,
        evaluator=section.get("evaluator", "generic").strip().lower(),
    )


def list_plugin_ids(path: Path | str) -> list[str]:
    parser = configparser.ConfigParser(interpolation=None)
    if not parser.read(str(path), encoding="utf-8"):
        raise MissingSection(f"config file not found: {path}")
    return list(parser.sections())


def with_overrides(config: PluginConfig, **changes) -> PluginConfig:
    return replace(config, **changes)
