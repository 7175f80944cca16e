"""Minimal OAI-PMH 2.0 client: Identify, ListMetadataFormats, GetRecord.

Full-corpus harvesting (ListRecords, resumption tokens) is out of scope;
the evaluator always asks about a single item. Every protocol error code
is surfaced as ProtocolError carrying the code verbatim.
"""

from __future__ import annotations

import xml.etree.ElementTree as ET
from dataclasses import dataclass
from typing import Optional

import httpx

from .errors import NetworkError, ParseError, ProtocolError
from .identifiers import IdentifierRef, resolve_identifier
from .records import MetadataElement, MetadataFormat, MetadataRecord, MetadataSource

OAI_NS = "http://www.openarchives.org/OAI/2.0/"
OAI_DC_NS = "http://www.openarchives.org/OAI/2.0/oai_dc/"
DC_NS = "http://purl.org/dc/elements/1.1/"
DCTERMS_NS = "http://purl.org/dc/terms/"
DIM_NS = "http://www.dspace.org/xmlns/dspace/dim"

DEFAULT_TIMEOUT = httpx.Timeout(30.0, connect=10.0)


@dataclass(frozen=True)
class RepositoryDescriptor:
    repository_name: str
    base_url: str
    protocol_version: str
    admin_email: str


def _request(endpoint: str, params: dict, client: Optional[httpx.Client]) -> str:
    try:
        if client is not None:
            response = client.get(endpoint, params=params)
        else:
            with httpx.Client(timeout=DEFAULT_TIMEOUT, follow_redirects=True) as own:
                response = own.get(endpoint, params=params)
    except httpx.HTTPError as exc:
        raise NetworkError(f"{endpoint}: {exc}") from exc
    if response.status_code >= 400:
        # An endpoint that cannot speak the protocol at all is a reachability
        # problem, not an OAI error condition.
        raise NetworkError(f"{endpoint}: HTTP {response.status_code}")
    return response.text


def _parse(body: str) -> ET.Element:
    try:
        root = ET.fromstring(body)
    except ET.ParseError as exc:
        raise ParseError(f"malformed OAI-PMH XML: {exc}") from exc
    error = root.find(f"{{{OAI_NS}}}error")
    if error is not None:
        raise ProtocolError(error.get("code", "unknown"), (error.text or "").strip())
    return root


def _local_name(tag: str) -> str:
    return tag.rsplit("}", 1)[-1] if "}" in tag else tag


def oai_identify(endpoint: str, client: Optional[httpx.Client] = None) -> RepositoryDescriptor:
    root = _parse(_request(endpoint, {"verb": "Identify"}, client))
    section = root.find(f"{{{OAI_NS}}}Identify")
    if section is None:
        raise ParseError("Identify response lacks an Identify section")

    def text(name: str) -> str:
        node = section.find(f"{{{OAI_NS}}}{name}")
        return (node.text or "").strip() if node is not None else ""

    return RepositoryDescriptor(
        repository_name=text("repositoryName"),
        base_url=text("baseURL"),
        protocol_version=text("protocolVersion"),
        admin_email=text("adminEmail"),
    )


def oai_list_metadata_formats(
    endpoint: str,
    identifier: Optional[str] = None,
    client: Optional[httpx.Client] = None,
) -> list[MetadataFormat]:
    params = {"verb": "ListMetadataFormats"}
    if identifier:
        params["identifier"] = identifier
    root = _parse(_request(endpoint, params, client))
    formats = []
    for node in root.iter(f"{{{OAI_NS}}}metadataFormat"):
        def text(name: str) -> str:
            child = node.find(f"{{{OAI_NS}}}{name}")
            return (child.text or "").strip() if child is not None else ""

        formats.append(
            MetadataFormat(
                prefix=text("metadataPrefix"),
                schema=text("schema"),
                namespace=text("metadataNamespace"),
            )
        )
    return formats


def _elements_from_payload(payload: ET.Element) -> list[MetadataElement]:
    """Flatten one record payload into dot-qualified terms, order preserved.

    Three shapes are understood: oai_dc (dc:title -> dc.title), DSpace
    intermediate metadata (<field mdschema element qualifier>), and a
    generic fallback that maps leaf elements by namespace family.
    """
    elements: list[MetadataElement] = []
    for node in payload.iter():
        tag = node.tag if isinstance(node.tag, str) else ""
        if not tag:
            continue
        local = _local_name(tag).lower()
        if local == "field" and node.get("element"):
            schema = (node.get("mdschema") or "dc").lower()
            term = ".".join(
                part for part in (schema, node.get("element", "").lower(), (node.get("qualifier") or "").lower()) if part
            )
        elif tag.startswith(f"{{{DC_NS}}}"):
            term = f"dc.{local}"
        elif tag.startswith(f"{{{DCTERMS_NS}}}"):
            term = f"dcterms.{local}"
        elif len(node) == 0 and node is not payload:
            term = f"md.{local}"
        else:
            continue
        value = (node.text or "").strip()
        if value:
            elements.append(
                MetadataElement(
                    term=term,
                    value=value,
                    source=MetadataSource.OAI_PMH,
                    language=node.get("lang") or node.get("language"),
                )
            )
    return elements


def oai_get_record(
    endpoint: str,
    identifier: str,
    prefix: str,
    client: Optional[httpx.Client] = None,
    subject: Optional[IdentifierRef] = None,
    available_formats: tuple[MetadataFormat, ...] = (),
) -> MetadataRecord:
    params = {"verb": "GetRecord", "identifier": identifier, "metadataPrefix": prefix}
    root = _parse(_request(endpoint, params, client))
    metadata = root.find(f".//{{{OAI_NS}}}metadata")
    elements: list[MetadataElement] = []
    if metadata is not None:
        for payload in metadata:
            elements.extend(_elements_from_payload(payload))
    return MetadataRecord(
        subject=subject or resolve_identifier(identifier),
        elements=tuple(elements),
        available_formats=available_formats,
    )
