"""Exported knowledge graph: shape, determinism, independent re-parse."""

import pytest

from fairmeter.errors import InvalidNamespace
from fairmeter.evaluation import GenericEvaluator, TestResult
from fairmeter.plugin_config import PluginConfig
from fairmeter.plugins import InstitutionalRepositoryPlugin
from fairmeter.registry import load_registry
from fairmeter.semantics import export_test_graph

from ttl import parse_turtle

REGISTRY = load_registry()
BASE = "https://assessments.example.org/ns/"
SKOS = "http://www.w3.org/2004/02/skos/core#"
RDF_TYPE = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type"


@pytest.fixture(scope="module")
def generic_graph():
    plugin = GenericEvaluator(PluginConfig(plugin_id="generic"), REGISTRY)
    return export_test_graph(REGISTRY, plugin, BASE)


def test_graph_parses_with_independent_parser(generic_graph):
    triples = parse_turtle(generic_graph)
    assert triples


def test_graph_shape_counts(generic_graph):
    triples = parse_turtle(generic_graph)
    test_nodes = {
        subject
        for subject, predicate, obj in triples
        if predicate == RDF_TYPE and subject.startswith(f"{BASE}test/")
    }
    indicator_nodes = {
        subject
        for subject, predicate, obj in triples
        if predicate == RDF_TYPE and subject.startswith(f"{BASE}indicator/")
    }
    test_to_indicator = [
        (subject, obj[1])
        for subject, predicate, obj in triples
        if predicate in (f"{SKOS}closeMatch", f"{SKOS}relatedMatch")
        and subject.startswith(f"{BASE}test/")
    ]
    indicator_to_principle = [
        (subject, obj[1])
        for subject, predicate, obj in triples
        if predicate == f"{SKOS}broadMatch"
    ]
    assert len(test_nodes) == 41
    assert len(indicator_nodes) == 41
    assert len(test_to_indicator) == 41
    assert len(indicator_to_principle) == 41
    # no dangling edges: every edge target is a minted node or a principle URI
    for _, target in test_to_indicator:
        assert target in indicator_nodes
    for source, target in indicator_to_principle:
        assert source in indicator_nodes
        assert target.startswith("https://w3id.org/fair/principles/terms/")


def test_each_test_node_has_exactly_one_mapping_edge(generic_graph):
    triples = parse_turtle(generic_graph)
    counts = {}
    for subject, predicate, _ in triples:
        if predicate in (f"{SKOS}closeMatch", f"{SKOS}relatedMatch"):
            counts[subject] = counts.get(subject, 0) + 1
    assert all(count == 1 for count in counts.values())
    assert len(counts) == 41


def test_indicator_ids_carried_as_literals(generic_graph):
    triples = parse_turtle(generic_graph)
    notations = {
        obj[1]
        for _, predicate, obj in triples
        if predicate == f"{SKOS}notation" and obj[0] == "literal"
    }
    assert notations == {indicator.id for indicator in REGISTRY}


def test_proxy_tests_map_with_related_match(generic_graph):
    triples = parse_turtle(generic_graph)
    related = {
        subject.rsplit("/", 1)[1]
        for subject, predicate, _ in triples
        if predicate == f"{SKOS}relatedMatch"
    }
    expected = {i.config_key for i in REGISTRY if i.automation == "proxy"}
    assert related == expected


def test_export_is_byte_identical_across_runs():
    plugin = GenericEvaluator(PluginConfig(plugin_id="generic"), REGISTRY)
    first = export_test_graph(REGISTRY, plugin, BASE)
    second = export_test_graph(REGISTRY, plugin, BASE)
    assert first == second


def test_override_changes_note_but_not_shape(generic_graph):
    class Annotated(InstitutionalRepositoryPlugin):
        pass

    plugin = Annotated(PluginConfig(plugin_id="annotated"), REGISTRY)
    graph = export_test_graph(REGISTRY, plugin, BASE)
    assert graph != generic_graph
    ours = parse_turtle(graph)
    theirs = parse_turtle(generic_graph)
    assert len(ours) == len(theirs)
    # mapping structure identical: only skos:note literals may change
    skeleton = lambda triples: sorted(
        (s, p, o) for s, p, o in triples if p != f"{SKOS}note"
    )
    assert skeleton(ours) == skeleton(theirs)
    notes = {
        s.rsplit("/", 1)[1]: o[1] for s, p, o in ours if p == f"{SKOS}note"
    }
    assert notes["rda_r1_01m"] == plugin.NOTES["rda_r1_01m"]


def test_relation_override_hook():
    class Related(GenericEvaluator):
        relation_overrides = {"rda_f1_01m": "related"}

    graph = export_test_graph(REGISTRY, Related(PluginConfig(plugin_id="x"), REGISTRY), BASE)
    triples = parse_turtle(graph)
    f1 = [
        predicate
        for subject, predicate, _ in triples
        if subject == f"{BASE}test/rda_f1_01m"
        and predicate in (f"{SKOS}closeMatch", f"{SKOS}relatedMatch")
    ]
    assert f1 == [f"{SKOS}relatedMatch"]


@pytest.mark.parametrize("bad", ["", "not a uri", "   ", "relative/path"])
def test_invalid_namespace_rejected(bad):
    plugin = GenericEvaluator(PluginConfig(plugin_id="generic"), REGISTRY)
    with pytest.raises(InvalidNamespace):
        export_test_graph(REGISTRY, plugin, bad)


def test_note_escaping_round_trips():
    class Quoter(GenericEvaluator):
        def test_rda_f1_01m(self, context):
            return TestResult(
                indicator_id="RDA-F1-01M",
                points=100.0,
                technical_feedback="ok",
                implementation_note='Says "quoted"\nand newline\\backslash',
            )

    graph = export_test_graph(REGISTRY, Quoter(PluginConfig(plugin_id="q"), REGISTRY), BASE)
    triples = parse_turtle(graph)
    notes = [o[1] for s, p, o in triples if s == f"{BASE}test/rda_f1_01m" and p == f"{SKOS}note"]
    assert notes == ['Says "quoted"\nand newline\\backslash']
