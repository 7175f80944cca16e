"""Indicator tests over a harvested evaluation context.

GenericEvaluator implements one test method per indicator, driven solely
by configured term lists and the immutable context, so a repository
plugin can subclass it and override any subset: everything not
overridden keeps the generic behavior. Test methods are pure functions
of the context and may run in any order.

Every test returns points in [0, 100] plus the evidence it inspected, a
technical feedback line and a note describing the check actually
performed. Tips are attached later from the feedback catalog.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from datetime import datetime
from typing import Iterable, Mapping, Optional

from .errors import EmptyIdentifier
from .harvest import HarvestBundle, HarvestSession, harvest_bundle
from .identifiers import IdentifierKind, IdentifierRef, PID_KINDS, resolve_identifier
from .plugin_config import PluginConfig
from .records import MetadataFormat, MetadataRecord, MetadataSource, TypedLink
from .registry import IndicatorRegistry, PrincipleGroup, to_config_key


@dataclass(frozen=True)
class EvaluationContext:
    """Everything a test may look at, assembled once per evaluation."""

    subject: IdentifierRef
    metadata: MetadataRecord
    landing_links: tuple[TypedLink, ...] = ()
    oai_formats: tuple[MetadataFormat, ...] = ()
    plugin_config: PluginConfig = field(default_factory=lambda: PluginConfig(plugin_id="generic"))
    locale: str = "en"
    landing_status: Optional[int] = None
    oai_reachable: bool = False
    harvest_notes: tuple[str, ...] = ()

    @property
    def landing_ok(self) -> bool:
        return self.landing_status is not None and 200 <= self.landing_status < 300


@dataclass(frozen=True)
class TestResult:
    indicator_id: str
    points: float
    evidence: tuple[tuple[str, str], ...] = ()
    technical_feedback: str = ""
    tips: str = ""
    implementation_note: str = ""

    def __post_init__(self) -> None:
        if not 0.0 <= self.points <= 100.0:
            raise ValueError(f"{self.indicator_id}: points out of range: {self.points}")
        if self.points < 100.0 and not self.technical_feedback:
            raise ValueError(f"{self.indicator_id}: failing result needs technical feedback")


@dataclass(frozen=True)
class Assessment:
    subject: IdentifierRef
    plugin_id: str
    results: Mapping[str, TestResult]  # canonical indicator id -> result
    group_scores: Mapping[PrincipleGroup, float]
    total_score: float
    started_at: datetime
    finished_at: datetime
    locale: str = "en"


def _resolve_quiet(value: str) -> Optional[IdentifierRef]:
    try:
        return resolve_identifier(value)
    except EmptyIdentifier:
        return None


def _is_url(value: str) -> bool:
    return value.lower().startswith(("http://", "https://"))


class GenericEvaluator:
    """Repository-agnostic implementation of every indicator test.

    Subclasses declare their own plugin id, may redefine harvesting, and
    may override individual test_<config_key> methods. `tips_overrides`
    maps config keys to catalog key prefixes when a plugin ships its own
    feedback texts; `relation_overrides` adjusts the exported SKOS
    mapping for redefined tests.
    """

    plugin_id = "generic"
    relation_overrides: dict[str, str] = {}

    def __init__(self, config: PluginConfig, registry: IndicatorRegistry):
        self.config = config
        self.registry = registry

    # -- plugin contract -----------------------------------------------------

    def get_metadata(
        self, subject: IdentifierRef, session: Optional[HarvestSession] = None
    ) -> HarvestBundle:
        """Harvest every configured source for the subject. Overridable."""
        return harvest_bundle(self.config, subject, session)

    def get_data_refs(self, context: EvaluationContext) -> list[IdentifierRef]:
        """References to the data itself: configured terms plus item links."""
        refs = []
        for term in self.config.data_identifier_terms:
            for value in context.metadata.values(term):
                resolved = _resolve_quiet(value)
                if resolved is not None and resolved.kind != IdentifierKind.INTERNAL:
                    refs.append(resolved)
        for link in context.landing_links:
            if link.relation.lower() == "item":
                resolved = _resolve_quiet(link.href)
                if resolved is not None:
                    refs.append(resolved)
        return refs

    def test_method(self, config_key: str):
        return getattr(self, f"test_{config_key}", None)

    def run_test(self, context: EvaluationContext, indicator_id: str) -> TestResult:
        """Run one test with failure containment: a raising test scores 0."""
        config_key = to_config_key(self.registry.get(indicator_id).id)
        method = self.test_method(config_key)
        canonical = self.registry.get(indicator_id).id
        if method is None:
            return TestResult(
                indicator_id=canonical,
                points=0.0,
                technical_feedback=f"No test is implemented for {canonical}.",
                implementation_note="Not implemented.",
            )
        try:
            return method(context)
        except Exception as exc:  # noqa: BLE001 - one broken test must not abort the run
            return TestResult(
                indicator_id=canonical,
                points=0.0,
                evidence=(("error", f"{type(exc).__name__}: {exc}"),),
                technical_feedback=(
                    f"The test for {canonical} failed internally "
                    f"({type(exc).__name__}: {exc}); scored as 0."
                ),
                implementation_note="Test aborted by an internal error.",
            )

    # -- shared checks ---------------------------------------------------------

    def _matches(self, context: EvaluationContext, terms: Iterable[str]) -> list[tuple[str, str]]:
        found = []
        for term in terms:
            needle = term.lower()
            for element in context.metadata.elements:
                if element.term == needle or element.term.startswith(needle + "."):
                    if element.value.strip():
                        found.append((element.term, element.value))
        return found

    def _identifier_evidence(
        self,
        context: EvaluationContext,
        terms: Iterable[str],
        kinds: frozenset[IdentifierKind],
    ) -> list[tuple[str, str]]:
        hits = []
        for term, value in self._matches(context, terms):
            resolved = _resolve_quiet(value)
            if resolved is not None and resolved.kind in kinds:
                hits.append((term, value))
        return hits

    def _result(
        self,
        indicator_id: str,
        points: float,
        evidence: list[tuple[str, str]],
        ok_feedback: str,
        fail_feedback: str,
        note: str,
    ) -> TestResult:
        return TestResult(
            indicator_id=indicator_id,
            points=points,
            evidence=tuple(evidence),
            technical_feedback=ok_feedback if points >= 100.0 else fail_feedback,
            implementation_note=note,
        )

    def _identifier_test(
        self,
        context: EvaluationContext,
        indicator_id: str,
        terms: tuple[str, ...],
        kinds: frozenset[IdentifierKind],
        what: str,
    ) -> TestResult:
        hits = self._identifier_evidence(context, terms, kinds)
        kinds_text = "/".join(sorted(kind.value for kind in kinds))
        return self._result(
            indicator_id,
            100.0 if hits else 0.0,
            hits or [("checked_terms", ", ".join(terms))],
            f"Found {what} in {hits[0][0]}: {hits[0][1]}" if hits else "",
            f"None of the configured terms ({', '.join(terms)}) holds a {what}.",
            f"Searches the configured terms ({', '.join(terms)}) for a value that "
            f"classifies as {kinds_text}.",
        )

    # -- findability -----------------------------------------------------------

    ANY_RESOLVABLE = frozenset({IdentifierKind.DOI, IdentifierKind.HANDLE, IdentifierKind.URL})

    def test_rda_f1_01m(self, context: EvaluationContext) -> TestResult:
        return self._identifier_test(
            context, "RDA-F1-01M", self.config.identifier_terms, self.ANY_RESOLVABLE,
            "metadata identifier",
        )

    def test_rda_f1_01d(self, context: EvaluationContext) -> TestResult:
        return self._identifier_test(
            context, "RDA-F1-01D", self.config.data_identifier_terms, self.ANY_RESOLVABLE,
            "data identifier",
        )

    def test_rda_f1_02m(self, context: EvaluationContext) -> TestResult:
        return self._identifier_test(
            context, "RDA-F1-02M", self.config.identifier_terms, PID_KINDS,
            "persistent metadata identifier (DOI or Handle)",
        )

    def test_rda_f1_02d(self, context: EvaluationContext) -> TestResult:
        return self._identifier_test(
            context, "RDA-F1-02D", self.config.data_identifier_terms, PID_KINDS,
            "persistent data identifier (DOI or Handle)",
        )

    def test_rda_f2_01m(self, context: EvaluationContext) -> TestResult:
        filled = sorted(context.metadata.terms_filled())
        target = self.config.richness_target
        points = 100.0 * min(1.0, len(filled) / target)
        return self._result(
            "RDA-F2-01M",
            points,
            [("distinct_terms", str(len(filled))), ("target", str(target))],
            f"The record fills {len(filled)} distinct metadata terms (target {target}).",
            f"The record fills only {len(filled)} of the {target} distinct metadata "
            "terms expected for a rich description.",
            "Counts distinct filled metadata terms against the configured richness target.",
        )

    def test_rda_f3_01m(self, context: EvaluationContext) -> TestResult:
        hits = self._identifier_evidence(
            context, self.config.data_identifier_terms, self.ANY_RESOLVABLE
        )
        return self._result(
            "RDA-F3-01M",
            100.0 if hits else 0.0,
            hits or [("checked_terms", ", ".join(self.config.data_identifier_terms))],
            f"The metadata points at the data through {hits[0][0]}." if hits else "",
            "No metadata term links the record to the data it describes.",
            "Checks that the metadata record carries a resolvable identifier for the data "
            f"({', '.join(self.config.data_identifier_terms)}).",
        )

    def test_rda_f4_01m(self, context: EvaluationContext) -> TestResult:
        harvestable = context.oai_reachable
        indexed = any(
            element.source == MetadataSource.LANDING_PAGE for element in context.metadata.elements
        )
        points = 100.0 if harvestable or indexed else 0.0
        return self._result(
            "RDA-F4-01M",
            points,
            [("oai_pmh", str(context.oai_reachable).lower()), ("landing_meta", str(indexed).lower())],
            "Metadata is exposed for harvesting"
            + (" over OAI-PMH." if harvestable else " through landing-page meta tags."),
            "Metadata is neither harvestable over OAI-PMH nor embedded for indexers.",
            "Passes when the OAI-PMH endpoint answers for the item or the landing page "
            "embeds indexable metadata.",
        )

    # -- accessibility -----------------------------------------------------------

    def test_rda_a1_01m(self, context: EvaluationContext) -> TestResult:
        terms = self.config.access_terms + self.config.access_info_terms
        hits = self._matches(context, terms)
        return self._result(
            "RDA-A1-01M",
            100.0 if hits else 0.0,
            hits or [("checked_terms", ", ".join(terms))],
            f"Access information found in {hits[0][0]}." if hits else "",
            f"No access information in any of {', '.join(terms)}.",
            f"Looks for access information in the configured terms ({', '.join(terms)}).",
        )

    def test_rda_a1_02m(self, context: EvaluationContext) -> TestResult:
        embedded = [
            element for element in context.metadata.elements
            if element.source == MetadataSource.LANDING_PAGE
        ]
        described = [
            link for link in context.landing_links if link.relation.lower() == "describedby"
        ]
        points = 100.0 if embedded or described else 0.0
        evidence = [("landing_elements", str(len(embedded))), ("describedby_links", str(len(described)))]
        return self._result(
            "RDA-A1-02M", points, evidence,
            "The landing page exposes metadata for manual access.",
            "The landing page exposes no embedded metadata and no describedby link.",
            "Passes when the landing page embeds metadata tags or advertises a "
            "describedby typed link.",
        )

    def test_rda_a1_02d(self, context: EvaluationContext) -> TestResult:
        hits = self._matches(context, self.config.access_terms)
        return self._result(
            "RDA-A1-02D",
            100.0 if hits else 0.0,
            hits or [("checked_terms", ", ".join(self.config.access_terms))],
            f"Access status present in {hits[0][0]}: {hits[0][1]}" if hits else "",
            f"No access term ({', '.join(self.config.access_terms)}) is present.",
            f"Checks the presence of an access metadata term ({', '.join(self.config.access_terms)}).",
        )

    def test_rda_a1_03m(self, context: EvaluationContext) -> TestResult:
        count = len(context.metadata.elements)
        return self._result(
            "RDA-A1-03M",
            100.0 if count else 0.0,
            [("elements_harvested", str(count))],
            f"The identifier dereferenced to a metadata record with {count} elements.",
            "Dereferencing the identifier produced no metadata record.",
            "Passes when the subject identifier led to a retrievable metadata record.",
        )

    def test_rda_a1_03d(self, context: EvaluationContext) -> TestResult:
        return self._result(
            "RDA-A1-03D",
            100.0 if context.landing_ok else 0.0,
            [("landing_status", str(context.landing_status))],
            f"The identifier resolves to a digital object page (HTTP {context.landing_status}).",
            "The identifier does not resolve to a reachable digital object page.",
            "Dereferences the identifier and expects a successful landing-page response.",
        )

    def _protocol_result(self, context: EvaluationContext, indicator_id: str, note: str) -> TestResult:
        reachable = context.oai_reachable or context.landing_ok
        protocols = []
        if context.landing_ok:
            protocols.append("http(s)")
        if context.oai_reachable:
            protocols.append("oai-pmh")
        return self._result(
            indicator_id,
            100.0 if reachable else 0.0,
            [("protocols", ", ".join(protocols) or "none")],
            f"Served over standard protocols: {', '.join(protocols)}.",
            "No standard access protocol answered for this object.",
            note,
        )

    def test_rda_a1_04m(self, context: EvaluationContext) -> TestResult:
        return self._protocol_result(
            context, "RDA-A1-04M",
            "Verifies that the metadata is served over HTTP(S) or OAI-PMH.",
        )

    def test_rda_a1_04d(self, context: EvaluationContext) -> TestResult:
        return self._result(
            "RDA-A1-04D",
            100.0 if context.landing_ok else 0.0,
            [("landing_status", str(context.landing_status))],
            "Data is reachable through standard HTTP(S).",
            "The data landing page is not reachable over HTTP(S).",
            "Verifies that the data is reachable over HTTP(S).",
        )

    def test_rda_a1_05d(self, context: EvaluationContext) -> TestResult:
        refs = self.get_data_refs(context)
        item_links = [link for link in context.landing_links if link.relation.lower() == "item"]
        points = 100.0 if refs or item_links else 0.0
        return self._result(
            "RDA-A1-05D",
            points,
            [("data_refs", str(len(refs))), ("item_links", str(len(item_links)))],
            "Data files are addressable for automated retrieval.",
            "No machine-actionable reference to the data files was found.",
            "Passes when typed item links or resolvable data references allow automated "
            "download.",
        )

    def test_rda_a1_1_01m(self, context: EvaluationContext) -> TestResult:
        return self._protocol_result(
            context, "RDA-A1.1-01M",
            "Passes when the metadata is served over a free, open protocol (HTTP(S), "
            "OAI-PMH) without credentials.",
        )

    def test_rda_a1_1_01d(self, context: EvaluationContext) -> TestResult:
        reachable = context.landing_ok or any(
            link.relation.lower() == "item" for link in context.landing_links
        )
        return self._result(
            "RDA-A1.1-01D",
            100.0 if reachable else 0.0,
            [("landing_status", str(context.landing_status))],
            "Data access uses a free, open protocol.",
            "No open-protocol route to the data files was observed.",
            "Passes when the data is reachable over open HTTP(S) without credentials.",
        )

    def test_rda_a1_2_01d(self, context: EvaluationContext) -> TestResult:
        reachable = context.oai_reachable or context.landing_ok
        return self._result(
            "RDA-A1.2-01D",
            100.0 if reachable else 0.0,
            [("protocol", "http(s)" if reachable else "none")],
            "The access protocol (HTTP(S)) supports standard authentication and "
            "authorisation when restrictions apply.",
            "No protocol supporting authentication and authorisation answered.",
            "Interpreted as: the transport protocol must support authentication and "
            "authorisation (HTTP(S) does); no credential exchange is attempted.",
        )

    def test_rda_a2_01m(self, context: EvaluationContext) -> TestResult:
        url = self.config.preservation_policy_url
        return self._result(
            "RDA-A2-01M",
            100.0 if url else 0.0,
            [("preservation_policy_url", url or "not configured")],
            f"The repository declares a metadata preservation policy: {url}",
            "No metadata preservation policy is declared for this repository; ask the "
            "repository administrators to publish one.",
            "Reads the declared metadata-preservation policy from the plugin "
            "configuration; repositories cannot expose this programmatically.",
        )

    # -- interoperability ----------------------------------------------------------

    def _vocabulary_hits(
        self, context: EvaluationContext, prefixes: Iterable[str]
    ) -> list[tuple[str, str]]:
        prefix_tuple = tuple(prefixes)
        return [
            (element.term, element.value)
            for element in context.metadata.elements
            if element.value.startswith(prefix_tuple)
        ]

    def test_rda_i1_01m(self, context: EvaluationContext) -> TestResult:
        hits = self._vocabulary_hits(context, self.config.vocabulary_url_patterns)
        return self._result(
            "RDA-I1-01M",
            100.0 if hits else 0.0,
            hits or [("checked_patterns", str(len(self.config.vocabulary_url_patterns)))],
            f"Metadata values use standardised vocabulary URIs ({hits[0][1]})." if hits else "",
            "No metadata value references a standardised vocabulary URI.",
            "Scans element values for URIs under the configured vocabulary namespaces.",
        )

    def test_rda_i1_01d(self, context: EvaluationContext) -> TestResult:
        hits = self._matches(context, ("dc.format",))
        return self._result(
            "RDA-I1-01D",
            100.0 if hits else 0.0,
            hits or [("checked_terms", "dc.format")],
            f"The data format is declared as {hits[0][1]}." if hits else "",
            "The metadata does not declare the data's format, so its knowledge "
            "representation cannot be established.",
            "Proxy check: accepts a declared data serialisation format (dc.format) as "
            "evidence of a standardised representation.",
        )

    def test_rda_i1_02m(self, context: EvaluationContext) -> TestResult:
        rdf_bearing = [
            fmt for fmt in context.oai_formats
            if fmt.prefix in self.config.rdf_format_prefixes
            or "rdf" in fmt.namespace.lower()
            or "rdf" in fmt.schema.lower()
        ]
        return self._result(
            "RDA-I1-02M",
            100.0 if rdf_bearing else 0.0,
            [("oai_formats", ", ".join(fmt.prefix for fmt in context.oai_formats) or "none")],
            f"Metadata is retrievable in an RDF-bearing format ({rdf_bearing[0].prefix})."
            if rdf_bearing else "",
            "OAI-PMH offers no RDF-bearing metadata format for this item.",
            "Checks, via OAI-PMH ListMetadataFormats, whether the item's metadata can be "
            "retrieved in an RDF-bearing format.",
        )

    def test_rda_i1_02d(self, context: EvaluationContext) -> TestResult:
        typed = [
            link for link in context.landing_links
            if link.media_type and link.relation.lower() in ("describedby", "item")
        ]
        return self._result(
            "RDA-I1-02D",
            100.0 if typed else 0.0,
            [(link.relation, f"{link.href} ({link.media_type})") for link in typed]
            or [("typed_links", "none")],
            "Machine-understandable representations are advertised through typed links.",
            "No typed link advertises a machine-understandable representation of the data.",
            "Proxy check: looks for describedby/item typed links carrying a media type.",
        )

    def test_rda_i2_01m(self, context: EvaluationContext) -> TestResult:
        hits = self._vocabulary_hits(context, self.config.standard_vocabularies)
        return self._result(
            "RDA-I2-01M",
            100.0 if hits else 0.0,
            hits or [("checked_vocabularies", str(len(self.config.standard_vocabularies)))],
            f"FAIR-compliant vocabulary term in use: {hits[0][1]}" if hits else "",
            "No element value references a registered FAIR-compliant vocabulary.",
            "Matches element values against the configured registry of standard "
            "vocabulary URI prefixes.",
        )

    def test_rda_i2_01d(self, context: EvaluationContext) -> TestResult:
        hits = self._vocabulary_hits(context, self.config.standard_vocabularies)
        return self._result(
            "RDA-I2-01D",
            100.0 if hits else 0.0,
            hits or [("checked_vocabularies", str(len(self.config.standard_vocabularies)))],
            "The data description draws on FAIR-compliant vocabularies.",
            "The data description uses no FAIR-compliant vocabulary URIs.",
            "Proxy check: vocabulary usage in the metadata stands in for vocabulary "
            "usage inside the data.",
        )

    def _relation_hits(self, context: EvaluationContext, qualified: bool) -> list[tuple[str, str]]:
        hits = []
        for term, value in self._matches(context, self.config.relation_terms):
            if qualified and term.count(".") < 2:
                continue
            resolved = _resolve_quiet(value)
            if resolved is not None and resolved.kind in self.ANY_RESOLVABLE:
                hits.append((term, value))
        return hits

    def _relation_test(
        self, context: EvaluationContext, indicator_id: str, qualified: bool, what: str
    ) -> TestResult:
        hits = self._relation_hits(context, qualified)
        kind = "qualified " if qualified else ""
        return self._result(
            indicator_id,
            100.0 if hits else 0.0,
            hits or [("checked_terms", ", ".join(self.config.relation_terms))],
            f"Found a {kind}reference in {hits[0][0]}: {hits[0][1]}" if hits else "",
            f"No {kind}relation term holds a resolvable reference to {what}.",
            f"Passes when at least one {kind}relation element "
            f"({', '.join(self.config.relation_terms)}) resolves as an identifier; one "
            "resolvable reference earns full marks.",
        )

    def test_rda_i3_01m(self, context: EvaluationContext) -> TestResult:
        return self._relation_test(context, "RDA-I3-01M", False, "other metadata")

    def test_rda_i3_01d(self, context: EvaluationContext) -> TestResult:
        return self._relation_test(context, "RDA-I3-01D", False, "other data")

    def test_rda_i3_02m(self, context: EvaluationContext) -> TestResult:
        return self._relation_test(context, "RDA-I3-02M", False, "other data")

    def test_rda_i3_02d(self, context: EvaluationContext) -> TestResult:
        return self._relation_test(context, "RDA-I3-02D", True, "other data")

    def test_rda_i3_03m(self, context: EvaluationContext) -> TestResult:
        return self._relation_test(context, "RDA-I3-03M", True, "other metadata")

    def test_rda_i3_04m(self, context: EvaluationContext) -> TestResult:
        return self._relation_test(context, "RDA-I3-04M", True, "other data")

    # -- reusability -----------------------------------------------------------------

    def test_rda_r1_01m(self, context: EvaluationContext) -> TestResult:
        resource_types = context.metadata.values("dc.type")
        mandatory = self.config.mandatory_terms_for(resource_types[0] if resource_types else None)
        filled_mandatory = [term for term in mandatory if self._matches(context, (term,))]
        mandatory_share = len(filled_mandatory) / len(mandatory) if mandatory else 1.0
        distinct = len(context.metadata.terms_filled())
        richness_share = min(1.0, distinct / self.config.richness_target)
        points = 75.0 * mandatory_share + 25.0 * richness_share
        missing = sorted(set(mandatory) - set(filled_mandatory))
        return self._result(
            "RDA-R1-01M",
            points,
            [
                ("mandatory_filled", f"{len(filled_mandatory)}/{len(mandatory)}"),
                ("distinct_terms", f"{distinct}/{self.config.richness_target}"),
            ],
            "All mandatory terms are filled and the description is rich.",
            (
                f"Mandatory terms missing: {', '.join(missing)}. " if missing else ""
            )
            + f"The record fills {distinct} distinct terms of the "
            f"{self.config.richness_target} expected for a rich description.",
            "Scores 75% for filled mandatory terms plus 25% for overall richness "
            "(distinct filled terms against the configured target).",
        )

    def _license_values(self, context: EvaluationContext) -> list[tuple[str, str]]:
        return self._matches(context, self.config.license_terms)

    def test_rda_r1_1_01m(self, context: EvaluationContext) -> TestResult:
        values = self._license_values(context)
        urls = [(term, value) for term, value in values if _is_url(value)]
        if urls:
            points, evidence = 100.0, urls
        elif values:
            points, evidence = 50.0, values
        else:
            points, evidence = 0.0, [("checked_terms", ", ".join(self.config.license_terms))]
        return self._result(
            "RDA-R1.1-01M",
            points,
            evidence,
            f"License available in URL form: {urls[0][1]}" if urls else "",
            "License information is present but not in URL form; use a resolvable "
            "license URL to make it machine-actionable."
            if values
            else f"No license information in {', '.join(self.config.license_terms)}.",
            "Checks if the license information is available in any form in the "
            f"configured terms ({', '.join(self.config.license_terms)}); URL form earns "
            "full marks, plain text half.",
        )

    def test_rda_r1_1_02m(self, context: EvaluationContext) -> TestResult:
        hits = [
            (term, value)
            for term, value in self._license_values(context)
            if value.startswith(tuple(self.config.standard_licenses))
        ]
        return self._result(
            "RDA-R1.1-02M",
            100.0 if hits else 0.0,
            hits or [("checked_terms", ", ".join(self.config.license_terms))],
            f"The license is a recognised standard license: {hits[0][1]}" if hits else "",
            "The metadata does not reference a recognised standard license.",
            "Matches license values against well-known standard-license URL prefixes.",
        )

    def test_rda_r1_1_03m(self, context: EvaluationContext) -> TestResult:
        hits = [(term, value) for term, value in self._license_values(context) if _is_url(value)]
        return self._result(
            "RDA-R1.1-03M",
            100.0 if hits else 0.0,
            hits or [("checked_terms", ", ".join(self.config.license_terms))],
            "The license reference is machine-understandable (URL form).",
            "No machine-understandable (URL form) license reference was found.",
            "Requires the license reference to be expressed as a dereferenceable URL.",
        )

    def test_rda_r1_2_01m(self, context: EvaluationContext) -> TestResult:
        hits = self._matches(context, self.config.provenance_terms)
        return self._result(
            "RDA-R1.2-01M",
            100.0 if hits else 0.0,
            hits or [("checked_terms", ", ".join(self.config.provenance_terms))],
            f"Provenance information present in {hits[0][0]}." if hits else "",
            f"No provenance information in {', '.join(self.config.provenance_terms)}.",
            "Checks the presence of the configured provenance-bearing terms "
            f"({', '.join(self.config.provenance_terms)}).",
        )

    def test_rda_r1_2_02m(self, context: EvaluationContext) -> TestResult:
        hits = [
            (term, value)
            for term, value in self._matches(context, self.config.provenance_terms)
            if _is_url(value)
        ]
        return self._result(
            "RDA-R1.2-02M",
            100.0 if hits else 0.0,
            hits or [("checked_terms", ", ".join(self.config.provenance_terms))],
            "Provenance is expressed with dereferenceable cross-community identifiers.",
            "Provenance, if any, is free text; expressing it with dereferenceable "
            "identifiers makes it usable across communities.",
            "Proxy check: provenance values in URL form stand in for a cross-community "
            "provenance language.",
        )

    def test_rda_r1_3_01m(self, context: EvaluationContext) -> TestResult:
        standard_formats = [
            fmt for fmt in context.oai_formats if fmt.prefix in self.config.community_standards
        ]
        dc_elements = any(
            element.term.startswith(("dc.", "dcterms.")) for element in context.metadata.elements
        )
        points = 100.0 if standard_formats or dc_elements else 0.0
        return self._result(
            "RDA-R1.3-01M",
            points,
            [("standard_formats", ", ".join(fmt.prefix for fmt in standard_formats) or "none"),
             ("dublin_core", str(dc_elements).lower())],
            "The metadata follows a community standard schema.",
            "The metadata does not follow any recognised community standard schema.",
            "Passes when the record is served in a community-standard metadata format "
            "or uses Dublin Core elements.",
        )

    def test_rda_r1_3_01d(self, context: EvaluationContext) -> TestResult:
        hits = self._matches(context, ("dc.format",))
        return self._result(
            "RDA-R1.3-01D",
            100.0 if hits else 0.0,
            hits or [("checked_terms", "dc.format")],
            f"The data declares a community-standard format: {hits[0][1]}" if hits else "",
            "The data's compliance with a community standard cannot be established "
            "because no format is declared.",
            "Proxy check: a declared data format (dc.format) is taken as the evidence "
            "of community-standard compliance available at metadata level.",
        )

    def test_rda_r1_3_02m(self, context: EvaluationContext) -> TestResult:
        with_schema = [fmt for fmt in context.oai_formats if fmt.schema]
        return self._result(
            "RDA-R1.3-02M",
            100.0 if with_schema else 0.0,
            [(fmt.prefix, fmt.schema) for fmt in with_schema] or [("oai_formats", "none")],
            "Metadata is expressed in a machine-validatable schema "
            f"({with_schema[0].prefix})." if with_schema else "",
            "No machine-validatable metadata schema is advertised for this item.",
            "Passes when OAI-PMH advertises a format with a machine-validatable schema "
            "URL for the item.",
        )

    def test_rda_r1_3_02d(self, context: EvaluationContext) -> TestResult:
        mime_formats = [
            (term, value) for term, value in self._matches(context, ("dc.format",)) if "/" in value
        ]
        typed_items = [
            link for link in context.landing_links
            if link.relation.lower() == "item" and link.media_type
        ]
        points = 100.0 if mime_formats or typed_items else 0.0
        evidence = mime_formats or [("item_links_with_type", str(len(typed_items)))]
        return self._result(
            "RDA-R1.3-02D",
            points,
            evidence,
            "The data's representation is machine-understandable (typed format).",
            "Neither a MIME-typed dc.format value nor a typed item link declares a "
            "machine-understandable data representation.",
            "Proxy check: accepts a MIME-typed dc.format value or an item link with a "
            "media type.",
        )
