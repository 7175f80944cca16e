"""Repository plugins: evaluator subclasses bound to INI configuration.

The institutional plugin is the reference specialization for a
DSpace-style institutional repository. Its redefined tests keep the
generic scoring rules and differ only in the documented implementation
texts and the term lists supplied by configuration, so any similar
repository can be targeted by editing the INI section alone.
"""

from __future__ import annotations

from dataclasses import replace
from pathlib import Path
from typing import Type

from .errors import ValidationError
from .evaluation import EvaluationContext, GenericEvaluator, TestResult
from .plugin_config import load_plugin_config, list_plugin_ids
from .registry import IndicatorRegistry


def _with_note(result: TestResult, note: str) -> TestResult:
    return replace(result, implementation_note=note)


class InstitutionalRepositoryPlugin(GenericEvaluator):
    """DSpace-style institutional repository specialization."""

    plugin_id = "institutional"

    NOTES = {
        "rda_f1_01m": (
            "Searches within a predefined list of potential metadata terms to identify "
            "the metadata (dc.identifier.uri and dc.identifier.doi) if any information "
            "is available."
        ),
        "rda_f1_01d": (
            "Searches within a predefined list of potential metadata terms "
            "(dc.identifier.uri, dc.identifier.doi and dc.relation.publisherversion) to "
            "identify the data if any information is available."
        ),
        "rda_a1_02m": (
            "Looks for the metadata terms in HTML in order to know if they can be "
            "accessed manually"
        ),
        "rda_a1_02d": (
            "Checks the presence of an access metadata term. In DIGITAL.CSIC this "
            "information is packaged in dc.rights. The metadata element dc.description "
            "is also used to provide extra information whenever data are not accessible "
            "on DIGITAL.CSIC."
        ),
        "rda_i1_02m": (
            "Checks, via OAI-PMH, if the metadata can be retrieved in a format like RDF"
        ),
        "rda_r1_01m": (
            "Depending on the metadata schema used, checks that at least the mandatory "
            "terms are filled (75%) and the number of terms are high (25%)"
        ),
        "rda_r1_1_01m": (
            "Checks if the license information is available in any format. In "
            "DIGITAL.CSIC this information is packaged in dc.rights.license"
        ),
    }

    def test_rda_f1_01m(self, context: EvaluationContext) -> TestResult:
        return _with_note(super().test_rda_f1_01m(context), self.NOTES["rda_f1_01m"])

    def test_rda_f1_01d(self, context: EvaluationContext) -> TestResult:
        return _with_note(super().test_rda_f1_01d(context), self.NOTES["rda_f1_01d"])

    def test_rda_a1_02m(self, context: EvaluationContext) -> TestResult:
        return _with_note(super().test_rda_a1_02m(context), self.NOTES["rda_a1_02m"])

    def test_rda_a1_02d(self, context: EvaluationContext) -> TestResult:
        return _with_note(super().test_rda_a1_02d(context), self.NOTES["rda_a1_02d"])

    def test_rda_i1_02m(self, context: EvaluationContext) -> TestResult:
        return _with_note(super().test_rda_i1_02m(context), self.NOTES["rda_i1_02m"])

    def test_rda_r1_01m(self, context: EvaluationContext) -> TestResult:
        return _with_note(super().test_rda_r1_01m(context), self.NOTES["rda_r1_01m"])

    def test_rda_r1_1_01m(self, context: EvaluationContext) -> TestResult:
        return _with_note(super().test_rda_r1_1_01m(context), self.NOTES["rda_r1_1_01m"])


EVALUATOR_CLASSES: dict[str, Type[GenericEvaluator]] = {
    "generic": GenericEvaluator,
    "institutional": InstitutionalRepositoryPlugin,
}


def build_plugins(
    ini_path: Path | str, registry: IndicatorRegistry
) -> dict[str, GenericEvaluator]:
    """Instantiate one evaluator per INI section; section name is the plugin id."""
    plugins: dict[str, GenericEvaluator] = {}
    for plugin_id in list_plugin_ids(ini_path):
        config = load_plugin_config(ini_path, plugin_id)
        evaluator_class = EVALUATOR_CLASSES.get(config.evaluator)
        if evaluator_class is None:
            raise ValidationError(
                f"[{plugin_id}] unknown evaluator {config.evaluator!r}; "
                f"expected one of {sorted(EVALUATOR_CLASSES)}"
            )
        plugin = evaluator_class(config, registry)
        plugin.plugin_id = plugin_id
        plugins[plugin_id] = plugin
    return plugins
