"""Typed-link discovery: RFC 8288 Link headers plus HTML <link> elements.

Header links are listed before document links. Malformed link-values are
skipped, never fatal; the skip count is kept for diagnostics.
"""

from __future__ import annotations

from dataclasses import dataclass
from html.parser import HTMLParser
from typing import Iterable, Iterator, Optional, Sequence

from .records import TypedLink


@dataclass(frozen=True)
class SignpostingResult:
    links: tuple[TypedLink, ...]
    skipped: int = 0

    def __iter__(self) -> Iterator[TypedLink]:
        return iter(self.links)

    def __len__(self) -> int:
        return len(self.links)

    def by_relation(self, relation: str) -> list[TypedLink]:
        wanted = relation.lower()
        return [link for link in self.links if link.relation.lower() == wanted]


def _split_link_values(header: str) -> list[str]:
    """Split a Link header on top-level commas (not inside <...> or quotes)."""
    values = []
    depth_uri = False
    in_quotes = False
    current = []
    for char in header:
        if char == "<" and not in_quotes:
            depth_uri = True
        elif char == ">" and not in_quotes:
            depth_uri = False
        elif char == '"':
            in_quotes = not in_quotes
        if char == "," and not depth_uri and not in_quotes:
            values.append("".join(current))
            current = []
        else:
            current.append(char)
    if current:
        values.append("".join(current))
    return [value.strip() for value in values if value.strip()]


def _parse_link_value(value: str) -> Optional[list[TypedLink]]:
    """One RFC 8288 link-value -> TypedLinks (one per relation type), or None."""
    if not value.startswith("<"):
        return None
    end = value.find(">")
    if end < 0:
        return None
    href = value[1:end].strip()
    if not href:
        return None
    relations: list[str] = []
    media_type: Optional[str] = None
    for param in value[end + 1:].split(";"):
        param = param.strip()
        if not param or "=" not in param:
            continue
        name, raw = param.split("=", 1)
        name = name.strip().lower()
        parsed = raw.strip().strip('"').strip("'").strip()
        if name == "rel":
            relations.extend(parsed.split())
        elif name == "type" and parsed:
            media_type = parsed
    if not relations:
        return None
    return [TypedLink(relation=rel, href=href, media_type=media_type) for rel in relations]


class _LinkElementCollector(HTMLParser):
    def __init__(self) -> None:
        super().__init__(convert_charrefs=True)
        self.links: list[TypedLink] = []
        self.skipped = 0

    def handle_starttag(self, tag: str, attrs: list[tuple[str, Optional[str]]]) -> None:
        if tag.lower() != "link":
            return
        attr_map = {k.lower(): (v or "").strip() for k, v in attrs}
        href = attr_map.get("href", "")
        relations = attr_map.get("rel", "").split()
        if not href or not relations:
            self.skipped += 1
            return
        for rel in relations:
            self.links.append(
                TypedLink(relation=rel, href=href, media_type=attr_map.get("type") or None)
            )


def parse_signposting(
    link_headers: Sequence[str] | Iterable[str] = (),
    document: bytes | str = "",
) -> SignpostingResult:
    """Collect typed links from Link headers and, after them, HTML <link> tags.

    Total over arbitrary input: malformed entries are counted and skipped.
    """
    links: list[TypedLink] = []
    skipped = 0
    for header in link_headers or ():
        if not isinstance(header, str):
            skipped += 1
            continue
        for value in _split_link_values(header):
            parsed = _parse_link_value(value)
            if parsed is None:
                skipped += 1
            else:
                links.extend(parsed)

    if document:
        text = document.decode("utf-8", errors="replace") if isinstance(document, bytes) else document
        collector = _LinkElementCollector()
        try:
            collector.feed(text)
            collector.close()
        except Exception:
            pass
        links.extend(collector.links)
        skipped += collector.skipped

    return SignpostingResult(links=tuple(links), skipped=skipped)
