"""Assembles all metadata sources for one evaluation.

One HarvestSession per evaluation shares a single HTTP client, so the
many indicator tests read from one fetch of each source. Individual
source failures are tolerated and recorded; only when no source at all
can be reached does the harvest fail.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional

import httpx

from .errors import FairmeterError, HarvestFailure, HttpError
from .identifiers import IdentifierKind, IdentifierRef
from .landing import MAX_REDIRECTS, extract_embedded_metadata, fetch_landing_page
from .oaipmh import oai_get_record, oai_list_metadata_formats
from .plugin_config import PluginConfig
from .records import MetadataElement, MetadataFormat, MetadataRecord, MetadataSource, TypedLink
from .signposting import parse_signposting

# qualified formats are preferred: they keep dc qualifiers that plain
# oai_dc flattens away
_PREFERRED_PREFIXES = ("dim", "qdc", "oai_dc")


@dataclass(frozen=True)
class HarvestBundle:
    record: MetadataRecord
    landing_links: tuple[TypedLink, ...] = ()
    landing_status: Optional[int] = None
    oai_reachable: bool = False
    notes: tuple[str, ...] = ()


class HarvestSession:
    """HTTP client shared by every fetch within a single evaluation."""

    def __init__(self, config: PluginConfig):
        self.client = httpx.Client(
            timeout=httpx.Timeout(config.total_timeout, connect=config.connect_timeout),
            follow_redirects=True,
            max_redirects=MAX_REDIRECTS,
            headers={"user-agent": "fairmeter/0.1"},
        )

    def close(self) -> None:
        self.client.close()

    def __enter__(self) -> "HarvestSession":
        return self

    def __exit__(self, *exc_info) -> None:
        self.close()


def _pick_prefix(config: PluginConfig, formats: tuple[MetadataFormat, ...]) -> Optional[str]:
    if config.oai_metadata_prefix:
        return config.oai_metadata_prefix
    available = [fmt.prefix for fmt in formats]
    for preferred in _PREFERRED_PREFIXES:
        if preferred in available:
            return preferred
    return available[0] if available else None


def _api_elements(template: str, subject: IdentifierRef, client: httpx.Client) -> list[MetadataElement]:
    """Optional repository-API source: a flat JSON object of term -> value(s)."""
    response = client.get(template.format(id=subject.normalized))
    response.raise_for_status()
    payload = json.loads(response.text)
    elements = []
    if isinstance(payload, dict):
        for term, values in payload.items():
            for value in values if isinstance(values, list) else [values]:
                if isinstance(value, str) and value.strip():
                    elements.append(
                        MetadataElement(
                            term=str(term).lower(),
                            value=value,
                            source=MetadataSource.REPOSITORY_API,
                        )
                    )
    return elements


def harvest_bundle(
    config: PluginConfig,
    subject: IdentifierRef,
    session: Optional[HarvestSession] = None,
) -> HarvestBundle:
    """Fetch OAI-PMH record and formats, landing page and typed links.

    Raises HarvestFailure when none of the configured sources yielded
    anything at all.
    """
    own_session = session is None
    session = session or HarvestSession(config)
    notes: list[str] = []
    elements: list[MetadataElement] = []
    formats: tuple[MetadataFormat, ...] = ()
    links: tuple[TypedLink, ...] = ()
    landing_status: Optional[int] = None
    oai_reachable = False
    reached_any = False

    try:
        if config.oai_endpoint:
            oai_id = config.oai_identifier_template.format(id=subject.normalized)
            try:
                formats = tuple(
                    oai_list_metadata_formats(config.oai_endpoint, oai_id, session.client)
                )
                oai_reachable = True
                reached_any = True
            except FairmeterError as exc:
                notes.append(f"oai-pmh formats: {exc}")
            prefix = _pick_prefix(config, formats)
            if prefix:
                try:
                    record = oai_get_record(
                        config.oai_endpoint, oai_id, prefix, session.client, subject=subject
                    )
                    elements.extend(record.elements)
                    oai_reachable = True
                    reached_any = True
                except FairmeterError as exc:
                    notes.append(f"oai-pmh record: {exc}")

        landing_url = None
        if subject.kind == IdentifierKind.URL:
            landing_url = subject.normalized
        elif config.landing_url_template:
            landing_url = config.landing_url_template.format(id=subject.normalized)
        if landing_url:
            try:
                page = fetch_landing_page(landing_url, session.client)
                landing_status = page.status_code
                reached_any = True
                elements.extend(extract_embedded_metadata(page.body))
                signposting = parse_signposting(page.link_headers, page.text)
                links = signposting.links
                if signposting.skipped:
                    notes.append(f"signposting: skipped {signposting.skipped} malformed link(s)")
            except HttpError as exc:
                landing_status = exc.status_code
                notes.append(f"landing page: {exc}")
            except FairmeterError as exc:
                notes.append(f"landing page: {exc}")

        if config.metadata_api_template:
            try:
                api_elements = _api_elements(config.metadata_api_template, subject, session.client)
                elements.extend(api_elements)
                reached_any = True
            except Exception as exc:  # noqa: BLE001 - optional source, schema unknown
                notes.append(f"repository api: {exc}")
    finally:
        if own_session:
            session.close()

    if not reached_any:
        raise HarvestFailure(
            f"no metadata source reachable for {subject.raw!r}: " + "; ".join(notes)
        )

    record = MetadataRecord(
        subject=subject, elements=tuple(elements), available_formats=formats
    )
    return HarvestBundle(
        record=record,
        landing_links=links,
        landing_status=landing_status,
        oai_reachable=oai_reachable,
        notes=tuple(notes),
    )
