"""SKOS knowledge graph relating implemented tests, indicators and principles.

The graph is serialized as Turtle with a stable node order (registry
order, fixed predicate order), so repeated exports of the same
configuration are byte-identical. Indicator URIs are minted under the
artifact namespace because the indicator set has no official semantic
publication yet; each minted node says so in an editorial note.

A test that fully automates its indicator maps with skos:closeMatch; a
test that checks a proxy (e.g. configuration-declared evidence) maps
with skos:relatedMatch. The default mapping ships with the registry
data and plugins may override it per test.
"""

from __future__ import annotations

import re

from .errors import InvalidNamespace
from .evaluation import EvaluationContext, GenericEvaluator
from .identifiers import IdentifierKind, IdentifierRef
from .records import MetadataRecord
from .registry import IndicatorRegistry

SKOS = "http://www.w3.org/2004/02/skos/core#"
DEFAULT_FAIR_VOCABULARY = "https://w3id.org/fair/principles/terms/"

_ABSOLUTE_URI_RE = re.compile(r"^[a-zA-Z][a-zA-Z0-9+.-]*:\S+$")

_MINTED_NOTE = (
    "Indicator URI minted locally; the indicator set is not published as "
    "semantic data officially yet."
)


def _check_namespace(namespace: str) -> str:
    if not namespace or not _ABSOLUTE_URI_RE.match(namespace):
        raise InvalidNamespace(f"not an absolute URI: {namespace!r}")
    return namespace if namespace.endswith(("/", "#", ":")) else namespace + "/"


def _escape(text: str) -> str:
    return (
        text.replace("\\", "\\\\")
        .replace('"', '\\"')
        .replace("\n", "\\n")
        .replace("\r", "\\r")
        .replace("\t", "\\t")
    )


def _probe_context(plugin: GenericEvaluator) -> EvaluationContext:
    subject = IdentifierRef(raw="probe", kind=IdentifierKind.INTERNAL, normalized="probe")
    return EvaluationContext(
        subject=subject,
        metadata=MetadataRecord(subject=subject),
        plugin_config=plugin.config,
    )


def export_test_graph(
    registry: IndicatorRegistry,
    plugin: GenericEvaluator,
    base_namespace: str,
    fair_vocabulary: str = DEFAULT_FAIR_VOCABULARY,
) -> str:
    """Serialize the test/indicator/principle graph for one plugin as Turtle."""
    base = _check_namespace(base_namespace)
    vocabulary = _check_namespace(fair_vocabulary)

    # Implementation notes are taken from a dry run of every test against
    # an empty context; the notes are static descriptions of the check.
    probe = _probe_context(plugin)

    lines = [f"@prefix skos: <{SKOS}> .", ""]
    for indicator in registry:
        key = indicator.config_key
        test_uri = f"{base}test/{key}"
        indicator_uri = f"{base}indicator/{key}"
        principle_uri = f"{vocabulary}{indicator.sub_principle}"
        note = plugin.run_test(probe, indicator.id).implementation_note
        relation = plugin.relation_overrides.get(
            key, "close" if indicator.automation == "full" else "related"
        )
        match_property = "skos:closeMatch" if relation == "close" else "skos:relatedMatch"

        lines.append(f"<{test_uri}> a skos:Concept ;")
        lines.append(f'    skos:prefLabel "test_{key}" ;')
        lines.append(f'    skos:note "{_escape(note)}" ;')
        lines.append(f"    {match_property} <{indicator_uri}> .")
        lines.append("")
        lines.append(f"<{indicator_uri}> a skos:Concept ;")
        lines.append(f'    skos:notation "{indicator.id}" ;')
        lines.append(f'    skos:prefLabel "{_escape(indicator.description)}" ;')
        lines.append(f'    skos:editorialNote "{_MINTED_NOTE}" ;')
        lines.append(f"    skos:broadMatch <{principle_uri}> .")
        lines.append("")
    return "\n".join(lines)
