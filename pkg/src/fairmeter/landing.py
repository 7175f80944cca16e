"""Landing-page retrieval and extraction of embedded metadata.

Real repository pages are rarely well-formed HTML, so extraction runs on
the tolerant stdlib parser and never raises: unparseable input yields an
empty element list.
"""

from __future__ import annotations

from dataclasses import dataclass
from html.parser import HTMLParser
from typing import Optional

import httpx

from .errors import HttpError, NetworkError, RedirectLoop
from .records import MetadataElement, MetadataSource

MAX_REDIRECTS = 5
DEFAULT_TIMEOUT = httpx.Timeout(30.0, connect=10.0)

# meta-tag name families that carry bibliographic metadata
_DC_PREFIXES = ("dc.", "dcterms.")
_CITATION_PREFIX = "citation_"


@dataclass(frozen=True)
class LandingPage:
    url: str
    status_code: int
    body: bytes
    content_type: str = ""
    link_headers: tuple[str, ...] = ()
    final_url: str = ""

    @property
    def text(self) -> str:
        return self.body.decode("utf-8", errors="replace")


def fetch_landing_page(url: str, client: Optional[httpx.Client] = None) -> LandingPage:
    """GET a landing page, following at most MAX_REDIRECTS redirects.

    Returns body, declared content type, status code and every Link
    header observed on the final response.
    """
    try:
        if client is not None:
            response = client.get(url)
        else:
            with httpx.Client(
                timeout=DEFAULT_TIMEOUT, follow_redirects=True, max_redirects=MAX_REDIRECTS
            ) as own:
                response = own.get(url)
    except httpx.TooManyRedirects as exc:
        raise RedirectLoop(f"{url}: more than {MAX_REDIRECTS} redirects") from exc
    except httpx.HTTPError as exc:
        raise NetworkError(f"{url}: {exc}") from exc
    if response.status_code >= 400:
        raise HttpError(response.status_code, url)
    return LandingPage(
        url=url,
        status_code=response.status_code,
        body=response.content,
        content_type=response.headers.get("content-type", ""),
        link_headers=tuple(
            value for name, value in response.headers.multi_items() if name.lower() == "link"
        ),
        final_url=str(response.url),
    )


class _MetaCollector(HTMLParser):
    def __init__(self) -> None:
        super().__init__(convert_charrefs=True)
        self.metas: list[tuple[str, str, Optional[str]]] = []

    def handle_starttag(self, tag: str, attrs: list[tuple[str, Optional[str]]]) -> None:
        if tag.lower() != "meta":
            return
        attr_map = {k.lower(): (v or "") for k, v in attrs}
        name = (attr_map.get("name") or attr_map.get("property") or "").strip()
        content = attr_map.get("content", "").strip()
        if name and content:
            self.metas.append((name, content, attr_map.get("lang") or attr_map.get("xml:lang")))


def _term_for_meta_name(name: str) -> Optional[str]:
    lowered = name.lower()
    if lowered.startswith(_DC_PREFIXES):
        return lowered
    if lowered.startswith(_CITATION_PREFIX):
        # citation_doi -> citation.doi
        return "citation." + lowered[len(_CITATION_PREFIX):].replace("_", ".")
    return None


def extract_embedded_metadata(document: bytes | str) -> tuple[MetadataElement, ...]:
    """Harvest DC-family and citation_* meta tags from an HTML document.

    Total over arbitrary input: anything unparseable contributes nothing.
    """
    text = document.decode("utf-8", errors="replace") if isinstance(document, bytes) else document
    collector = _MetaCollector()
    try:
        collector.feed(text)
        collector.close()
    except Exception:
        pass
    elements = []
    for name, content, language in collector.metas:
        term = _term_for_meta_name(name)
        if term is None:
            continue
        elements.append(
            MetadataElement(
                term=term,
                value=content,
                source=MetadataSource.LANDING_PAGE,
                language=language,
            )
        )
    return tuple(elements)
