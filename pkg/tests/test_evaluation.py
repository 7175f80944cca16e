"""Generic indicator tests over pure, offline contexts."""

import random

import pytest

from fairmeter.evaluation import GenericEvaluator, TestResult
from fairmeter.plugin_config import PluginConfig
from fairmeter.records import MetadataElement, MetadataSource
from fairmeter.registry import load_registry

REGISTRY = load_registry()


@pytest.fixture
def evaluator():
    return GenericEvaluator(PluginConfig(plugin_id="generic"), REGISTRY)


MANDATORY = [
    ("dc.contributor.author", "Vega Santos, Ana"),
    ("dc.title", "Coastal erosion measurements"),
    ("dc.date.issued", "2022-03-14"),
    ("dc.type", "dataset"),
    ("dc.identifier.uri", "http://hdl.handle.net/12345/67890"),
    ("dc.rights", "open access"),
    ("dc.language.iso", "en"),
]


# -- identifier family ------------------------------------------------------


def test_f1_01m_passes_on_handle_url(evaluator, context_factory):
    context = context_factory(elements=[("dc.identifier.uri", "http://hdl.handle.net/12345/67890")])
    result = evaluator.test_rda_f1_01m(context)
    assert result.points == 100.0
    assert ("dc.identifier.uri", "http://hdl.handle.net/12345/67890") in result.evidence


def test_f1_01m_fails_without_identifier_terms(evaluator, context_factory):
    context = context_factory(elements=[("dc.title", "X")])
    result = evaluator.test_rda_f1_01m(context)
    assert result.points == 0.0
    assert result.technical_feedback


def test_f1_01d_uses_data_identifier_terms(evaluator, context_factory):
    context = context_factory(
        elements=[("dc.relation.publisherversion", "https://doi.org/10.5555/ext.1")]
    )
    assert evaluator.test_rda_f1_01d(context).points == 100.0


def test_f1_02m_rejects_plain_url(evaluator, context_factory):
    context = context_factory(elements=[("dc.identifier.uri", "https://example.org/page/1")])
    result = evaluator.test_rda_f1_02m(context)
    assert result.points == 0.0
    # the same context passes the resolvable-identifier variant
    assert evaluator.test_rda_f1_01m(context).points == 100.0


def test_f1_02m_accepts_doi(evaluator, context_factory):
    context = context_factory(elements=[("dc.identifier.doi", "10.5555/x.y")])
    assert evaluator.test_rda_f1_02m(context).points == 100.0


def test_f2_richness_is_proportional(evaluator, context_factory):
    context = context_factory(elements=MANDATORY)
    assert evaluator.test_rda_f2_01m(context).points == pytest.approx(35.0)


# -- accessibility family ----------------------------------------------------


def test_a1_02m_passes_via_embedded_metadata(evaluator, context_factory):
    element = MetadataElement(term="dc.title", value="X", source=MetadataSource.LANDING_PAGE)
    context = context_factory(elements=[element], links=())
    assert evaluator.test_rda_a1_02m(context).points == 100.0


def test_a1_02m_passes_via_describedby_link(evaluator, context_factory):
    context = context_factory(elements=[], links=[("describedby", "/meta.rdf", "application/rdf+xml")])
    assert evaluator.test_rda_a1_02m(context).points == 100.0


def test_a1_02m_fails_without_either(evaluator, context_factory):
    context = context_factory(elements=[("dc.title", "X")], links=())
    result = evaluator.test_rda_a1_02m(context)
    assert result.points == 0.0


def test_a1_02d_checks_access_term(evaluator, context_factory):
    with_rights = context_factory(elements=[("dc.rights", "open access")])
    without = context_factory(elements=[("dc.title", "X")])
    assert evaluator.test_rda_a1_02d(with_rights).points == 100.0
    failing = evaluator.test_rda_a1_02d(without)
    assert failing.points == 0.0
    assert "dc.rights" in failing.technical_feedback


def test_a2_reads_declared_policy(context_factory):
    configured = GenericEvaluator(
        PluginConfig(plugin_id="p", preservation_policy_url="https://repo/policy"), REGISTRY
    )
    bare = GenericEvaluator(PluginConfig(plugin_id="p"), REGISTRY)
    context = context_factory()
    assert configured.test_rda_a2_01m(context).points == 100.0
    result = bare.test_rda_a2_01m(context)
    assert result.points == 0.0
    assert "administrators" in result.technical_feedback


def test_protocol_tests_fail_when_nothing_reachable(evaluator, context_factory):
    context = context_factory(landing_status=None, oai_reachable=False, formats=())
    for method in (
        evaluator.test_rda_a1_04m,
        evaluator.test_rda_a1_04d,
        evaluator.test_rda_a1_1_01m,
        evaluator.test_rda_a1_2_01d,
    ):
        assert method(context).points == 0.0


# -- interoperability family ---------------------------------------------------


def test_i1_02m_passes_with_rdf_prefix(evaluator, context_factory):
    assert evaluator.test_rda_i1_02m(context_factory()).points == 100.0


def test_i1_02m_fails_without_rdf(evaluator, context_factory):
    from conftest import STD_FORMATS

    context = context_factory(formats=[STD_FORMATS[0]])  # oai_dc only
    result = evaluator.test_rda_i1_02m(context)
    assert result.points == 0.0


def test_i2_vocabulary_prefix_match(evaluator, context_factory):
    context = context_factory(elements=[("dc.subject", "http://vocab.getty.edu/aat/300054722")])
    assert evaluator.test_rda_i2_01m(context).points == 100.0
    bare = context_factory(elements=[("dc.subject", "erosion")])
    assert evaluator.test_rda_i2_01m(bare).points == 0.0


def test_i3_relation_with_resolvable_value(evaluator, context_factory):
    context = context_factory(
        elements=[("dc.relation.publisherversion", "https://doi.org/10.5555/ext.1")]
    )
    assert evaluator.test_rda_i3_01m(context).points == 100.0
    assert evaluator.test_rda_i3_02d(context).points == 100.0


def test_i3_qualified_requires_qualifier(evaluator, context_factory):
    unqualified = context_factory(elements=[("dc.relation", "https://doi.org/10.5555/ext.1")])
    assert evaluator.test_rda_i3_01m(unqualified).points == 100.0
    assert evaluator.test_rda_i3_03m(unqualified).points == 0.0


def test_i3_unresolvable_relation_value_fails(evaluator, context_factory):
    context = context_factory(elements=[("dc.relation.ispartof", "some free text")])
    assert evaluator.test_rda_i3_01m(context).points == 0.0


# -- reusability family ----------------------------------------------------------


def test_r1_01m_full_marks(evaluator, context_factory):
    extra = [(f"dc.subject.area{i}", f"topic {i}") for i in range(13)]
    context = context_factory(elements=MANDATORY + extra)
    assert len(context.metadata.terms_filled()) == 20
    assert evaluator.test_rda_r1_01m(context).points == 100.0


def test_r1_01m_half_richness_exact(evaluator, context_factory):
    extra = [("dc.publisher", "MRI"), ("dc.format", "text/csv"), ("dc.subject", "coastal")]
    context = context_factory(elements=MANDATORY + extra)
    assert len(context.metadata.terms_filled()) == 10
    assert evaluator.test_rda_r1_01m(context).points == pytest.approx(87.5)


def test_r1_01m_missing_mandatory_is_named(evaluator, context_factory):
    context = context_factory(elements=MANDATORY[:-1])
    result = evaluator.test_rda_r1_01m(context)
    assert result.points == pytest.approx(75.0 * 6 / 7 + 25.0 * 6 / 20)
    assert "dc.language.iso" in result.technical_feedback


def test_r1_1_01m_url_license_scores_full(evaluator, context_factory):
    context = context_factory(
        elements=[("dc.rights.license", "https://creativecommons.org/licenses/by/4.0/")]
    )
    result = evaluator.test_rda_r1_1_01m(context)
    assert result.points == 100.0


def test_r1_1_01m_text_license_scores_half(evaluator, context_factory):
    context = context_factory(elements=[("dc.rights.license", "CC BY 4.0")])
    result = evaluator.test_rda_r1_1_01m(context)
    assert result.points == 50.0
    assert "URL" in result.technical_feedback


def test_r1_1_01m_absent_license_scores_zero(evaluator, context_factory):
    result = evaluator.test_rda_r1_1_01m(context_factory(elements=[("dc.rights", "open")]))
    assert result.points == 0.0


def test_r1_1_02m_standard_license_prefixes(evaluator, context_factory):
    standard = context_factory(
        elements=[("dc.rights.license", "https://creativecommons.org/licenses/by/4.0/")]
    )
    custom = context_factory(elements=[("dc.rights.license", "https://myrepo.example/license")])
    assert evaluator.test_rda_r1_1_02m(standard).points == 100.0
    assert evaluator.test_rda_r1_1_02m(custom).points == 0.0


def test_r1_2_01m_provenance_terms(evaluator, context_factory):
    context = context_factory(elements=[("dc.description.provenance", "Digitized from field notes")])
    assert evaluator.test_rda_r1_2_01m(context).points == 100.0


# -- contract-level behavior --------------------------------------------------------


def test_every_indicator_has_a_test_method(evaluator):
    for indicator in REGISTRY:
        assert evaluator.test_method(indicator.config_key) is not None, indicator.id


def test_all_results_carry_notes_and_valid_ranges(evaluator, context_factory):
    context = context_factory(elements=MANDATORY)
    for indicator in REGISTRY:
        result = evaluator.run_test(context, indicator.id)
        assert result.indicator_id == indicator.id
        assert 0.0 <= result.points <= 100.0
        assert result.implementation_note
        if result.points < 100.0:
            assert result.technical_feedback


def test_run_test_contains_exceptions(evaluator, context_factory):
    class Broken(GenericEvaluator):
        def test_rda_f1_01m(self, context):
            raise RuntimeError("synthetic failure")

    broken = Broken(PluginConfig(plugin_id="broken"), REGISTRY)
    result = broken.run_test(context_factory(), "RDA-F1-01M")
    assert result.points == 0.0
    assert "synthetic failure" in result.technical_feedback


def test_result_invariant_rejects_silent_failure():
    with pytest.raises(ValueError):
        TestResult(indicator_id="RDA-F1-01M", points=50.0, technical_feedback="")


def test_override_locality(evaluator, context_factory):
    class OneOverride(GenericEvaluator):
        def test_rda_f1_01m(self, context):
            return TestResult(
                indicator_id="RDA-F1-01M",
                points=0.0,
                technical_feedback="overridden",
                implementation_note="override",
            )

    overriding = OneOverride(PluginConfig(plugin_id="generic"), REGISTRY)
    context = context_factory(elements=MANDATORY)
    for indicator in REGISTRY:
        ours = overriding.run_test(context, indicator.id)
        generic = evaluator.run_test(context, indicator.id)
        if indicator.id == "RDA-F1-01M":
            assert ours != generic
        else:
            assert ours == generic


# -- monotonicity under added metadata ---------------------------------------------

ELEMENT_POOL = [
    ("dc.identifier.uri", "http://hdl.handle.net/12345/67890"),
    ("dc.identifier.doi", "https://doi.org/10.5555/sbay.2022.14"),
    ("dc.identifier.uri", "https://example.org/record/1"),
    ("dc.title", "A title"),
    ("dc.contributor.author", "Someone"),
    ("dc.date.issued", "2020-01-01"),
    ("dc.type", "dataset"),
    ("dc.rights", "open access"),
    ("dc.rights.license", "https://creativecommons.org/licenses/by/4.0/"),
    ("dc.rights.license", "CC BY"),
    ("dc.language.iso", "en"),
    ("dc.description", "free text"),
    ("dc.description.provenance", "derived from survey"),
    ("dc.description.provenance", "https://example.org/prov/1"),
    ("dc.subject", "http://vocab.getty.edu/aat/300054722"),
    ("dc.subject", "plain keyword"),
    ("dc.relation", "https://doi.org/10.5555/rel.1"),
    ("dc.relation.isreferencedby", "https://doi.org/10.5555/rel.2"),
    ("dc.relation.ispartof", "free text relation"),
    ("dc.format", "text/csv"),
    ("dc.format", "binary blob"),
    ("dc.coverage.spatial", "somewhere"),
    ("dc.publisher", "MRI"),
    ("dcterms.modified", "2021-02-03"),
]


def test_adding_metadata_never_decreases_points(evaluator, context_factory):
    rng = random.Random(424242)
    for _ in range(120):
        base_elements = rng.sample(ELEMENT_POOL, rng.randint(0, 8))
        addition = rng.choice(ELEMENT_POOL)
        base = context_factory(elements=base_elements)
        extended = context_factory(elements=base_elements + [addition])
        for indicator in REGISTRY:
            before = evaluator.run_test(base, indicator.id).points
            after = evaluator.run_test(extended, indicator.id).points
            assert after >= before, (
                f"{indicator.id} dropped from {before} to {after} after adding {addition}"
            )
