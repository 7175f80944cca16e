"""Normalized metadata containers shared by all harvest sources."""

from __future__ import annotations

from dataclasses import dataclass, field
from datetime import datetime, timezone
from enum import Enum
from typing import Optional

from .identifiers import IdentifierRef


class MetadataSource(str, Enum):
    OAI_PMH = "oai-pmh"
    LANDING_PAGE = "landing-page"
    REPOSITORY_API = "repository-api"
    SIGNPOSTING = "signposting"


@dataclass(frozen=True)
class MetadataElement:
    """One harvested metadata statement, e.g. (dc.rights.license, <url>)."""

    term: str  # lowercase, dot-qualified, e.g. "dc.identifier.uri"
    value: str
    source: MetadataSource
    language: Optional[str] = None

    def __post_init__(self) -> None:
        if not self.term:
            raise ValueError("metadata element term must be non-empty")
        if self.term != self.term.lower():
            raise ValueError(f"metadata term must be lowercase: {self.term!r}")


@dataclass(frozen=True)
class MetadataFormat:
    """An OAI-PMH metadata format descriptor (prefix, schema URL, namespace)."""

    prefix: str
    schema: str = ""
    namespace: str = ""


@dataclass(frozen=True)
class TypedLink:
    """A typed web link from an HTTP Link header or HTML <link> element."""

    relation: str
    href: str
    media_type: Optional[str] = None

    def __post_init__(self) -> None:
        if not self.relation or not self.href:
            raise ValueError("typed links need both a relation and a target")


@dataclass(frozen=True)
class MetadataRecord:
    """All metadata harvested for one subject, element order preserved."""

    subject: IdentifierRef
    elements: tuple[MetadataElement, ...] = ()
    available_formats: tuple[MetadataFormat, ...] = ()
    harvested_at: datetime = field(default_factory=lambda: datetime.now(timezone.utc))

    def __post_init__(self) -> None:
        prefixes = [fmt.prefix for fmt in self.available_formats]
        if len(prefixes) != len(set(prefixes)):
            raise ValueError("metadata format prefixes must be unique")

    def values(self, term: str) -> list[str]:
        """Values of elements whose term equals `term` or is qualified under it."""
        needle = term.lower()
        return [
            element.value
            for element in self.elements
            if element.term == needle or element.term.startswith(needle + ".")
        ]

    def terms_filled(self) -> set[str]:
        return {element.term for element in self.elements if element.value.strip()}

    def merged_with(self, extra: tuple[MetadataElement, ...]) -> "MetadataRecord":
        return MetadataRecord(
            subject=self.subject,
            elements=self.elements + tuple(extra),
            available_formats=self.available_formats,
            harvested_at=self.harvested_at,
        )
