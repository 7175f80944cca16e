"""Classification and normalization of persistent identifiers.

DOIs are matched before Handles: every DOI is syntactically a Handle
under the "10." prefix, so the order makes classification deterministic.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .errors import EmptyIdentifier


class IdentifierKind(str, Enum):
    DOI = "doi"
    HANDLE = "handle"
    URL = "url"
    INTERNAL = "internal"


PID_KINDS = frozenset({IdentifierKind.DOI, IdentifierKind.HANDLE})

_DOI_RESOLVERS = ("https://doi.org/", "http://doi.org/", "https://dx.doi.org/", "http://dx.doi.org/")
_HANDLE_RESOLVERS = ("https://hdl.handle.net/", "http://hdl.handle.net/")

_DOI_RE = re.compile(r"^(?:doi:)?(10\.\d{4,9}/\S+)$", re.IGNORECASE)
_HANDLE_RE = re.compile(r"^(?:hdl:)?(\d+(?:\.\d+)*/\S+)$", re.IGNORECASE)
_URL_RE = re.compile(r"^https?://\S+$", re.IGNORECASE)

# Handle resolved through a repository's own /handle/ path, the DSpace
# landing-page convention.
_LANDING_HANDLE_RE = re.compile(r"^https?://[^/]+/handle/(\d+(?:\.\d+)*/\S+)$", re.IGNORECASE)


@dataclass(frozen=True)
class IdentifierRef:
    raw: str
    kind: IdentifierKind
    normalized: str
    resolver_url: Optional[str] = None

    @property
    def is_persistent(self) -> bool:
        return self.kind in PID_KINDS


def resolve_identifier(raw: str) -> IdentifierRef:
    """Classify an identifier string as DOI, Handle, URL or internal id.

    Resolver prefixes (doi.org, hdl.handle.net and repository /handle/
    paths) are stripped into the bare normalized form; a matching
    resolver URL is attached for PID kinds. Idempotent: feeding the
    normalized form back reproduces kind and value.
    """
    text = raw.strip()
    if not text:
        raise EmptyIdentifier("identifier is empty")

    candidate = text
    for prefix in _DOI_RESOLVERS + _HANDLE_RESOLVERS:
        if candidate.lower().startswith(prefix):
            candidate = candidate[len(prefix):]
            break
    else:
        landing = _LANDING_HANDLE_RE.match(candidate)
        if landing:
            candidate = landing.group(1)

    doi = _DOI_RE.match(candidate)
    if doi:
        normalized = doi.group(1)
        return IdentifierRef(
            raw=raw,
            kind=IdentifierKind.DOI,
            normalized=normalized,
            resolver_url=f"https://doi.org/{normalized}",
        )

    handle = _HANDLE_RE.match(candidate)
    if handle:
        normalized = handle.group(1)
        return IdentifierRef(
            raw=raw,
            kind=IdentifierKind.HANDLE,
            normalized=normalized,
            resolver_url=f"https://hdl.handle.net/{normalized}",
        )

    if _URL_RE.match(text):
        return IdentifierRef(raw=raw, kind=IdentifierKind.URL, normalized=text, resolver_url=text)

    return IdentifierRef(raw=raw, kind=IdentifierKind.INTERNAL, normalized=text)
