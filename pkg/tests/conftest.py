"""Shared fixtures: a local fixture repository speaking OAI-PMH and HTTP.

The server answers with golden XML/HTML fixtures over real sockets, so
end-to-end tests exercise the full protocol path without any external
network access.
"""

from __future__ import annotations

import threading
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path
from urllib.parse import parse_qs, urlparse

import pytest

from fairmeter.evaluation import EvaluationContext
from fairmeter.identifiers import resolve_identifier
from fairmeter.plugin_config import PluginConfig
from fairmeter.records import (
    MetadataElement,
    MetadataFormat,
    MetadataRecord,
    MetadataSource,
    TypedLink,
)

FIXTURES = Path(__file__).parent / "fixtures"

RICH_ID = "12345/67890"
MINIMAL_ID = "12345/67891"
EMPTY_ID = "12345/67892"

_RECORDS = {
    RICH_ID: "record_rich.xml",
    MINIMAL_ID: "record_minimal.xml",
    EMPTY_ID: "record_empty.xml",
}

_PAGES = {
    RICH_ID: (
        "rich.html",
        [
            '<http://hdl.handle.net/12345/67890>; rel="cite-as", '
            '</metadata/67890.rdf>; rel="describedby"; type="application/rdf+xml", '
            '</files/shoreline.csv>; rel="item"; type="text/csv"'
        ],
    ),
    MINIMAL_ID: (
        "minimal.html",
        [
            '<http://hdl.handle.net/12345/67891>; rel="cite-as"',
            '</metadata/67891.rdf>; rel="describedby"; type="application/rdf+xml", '
            '</files/counts.csv>; rel="item"',
        ],
    ),
}

STD_FORMATS = (
    MetadataFormat(
        prefix="oai_dc",
        schema="http://www.openarchives.org/OAI/2.0/oai_dc.xsd",
        namespace="http://www.openarchives.org/OAI/2.0/oai_dc/",
    ),
    MetadataFormat(
        prefix="dim",
        schema="http://www.dspace.org/schema/dim.xsd",
        namespace="http://www.dspace.org/xmlns/dspace/dim",
    ),
    MetadataFormat(
        prefix="rdf",
        schema="http://www.openarchives.org/OAI/2.0/rdf.xsd",
        namespace="http://www.openarchives.org/OAI/2.0/rdf/",
    ),
)


def fixture_bytes(relative: str) -> bytes:
    return (FIXTURES / relative).read_bytes()


class FixtureRepoHandler(BaseHTTPRequestHandler):
    def log_message(self, *args) -> None:  # keep pytest output clean
        pass

    def _send(self, body: bytes, content_type: str, status: int = 200, headers=()) -> None:
        self.send_response(status)
        self.send_header("Content-Type", content_type)
        self.send_header("Content-Length", str(len(body)))
        for name, value in headers:
            self.send_header(name, value)
        self.end_headers()
        self.wfile.write(body)

    def _send_oai(self, name: str) -> None:
        self._send(fixture_bytes(f"oai/{name}"), "text/xml; charset=utf-8")

    def do_GET(self) -> None:  # noqa: N802 - http.server API
        url = urlparse(self.path)
        query = {key: values[0] for key, values in parse_qs(url.query).items()}

        if url.path == "/oai":
            verb = query.get("verb", "")
            identifier = query.get("identifier")
            if verb == "Identify":
                self._send_oai("identify.xml")
            elif verb == "ListMetadataFormats":
                if identifier is not None and identifier not in _RECORDS:
                    self._send_oai("error_idDoesNotExist.xml")
                else:
                    self._send_oai("list_formats.xml")
            elif verb == "GetRecord":
                prefix = query.get("metadataPrefix", "")
                if identifier not in _RECORDS:
                    self._send_oai("error_idDoesNotExist.xml")
                elif prefix == "dim":
                    self._send_oai(_RECORDS[identifier])
                elif prefix == "oai_dc":
                    self._send_oai("record_oai_dc.xml")
                else:
                    self._send_oai("error_cannotDisseminateFormat.xml")
            else:
                self._send_oai("error_badVerb.xml")
            return

        if url.path.startswith("/handle/"):
            handle = url.path[len("/handle/"):]
            if handle in _PAGES:
                page, link_headers = _PAGES[handle]
                self._send(
                    fixture_bytes(f"pages/{page}"),
                    "text/html; charset=utf-8",
                    headers=[("Link", value) for value in link_headers],
                )
            else:
                self._send(b"not found", "text/plain", status=404)
            return

        if url.path == "/loop":
            self.send_response(302)
            self.send_header("Location", "/loop")
            self.send_header("Content-Length", "0")
            self.end_headers()
            return

        self._send(b"not found", "text/plain", status=404)


@pytest.fixture(scope="session")
def repo_server():
    server = ThreadingHTTPServer(("127.0.0.1", 0), FixtureRepoHandler)
    thread = threading.Thread(target=server.serve_forever, daemon=True)
    thread.start()
    yield f"http://127.0.0.1:{server.server_address[1]}"
    server.shutdown()
    thread.join(timeout=5)


@pytest.fixture(scope="session")
def plugin_ini(repo_server, tmp_path_factory) -> Path:
    path = tmp_path_factory.mktemp("config") / "plugins.ini"
    path.write_text(
        f"""
[institutional]
evaluator = institutional
oai_endpoint = {repo_server}/oai
landing_url_template = {repo_server}/handle/{{id}}
preservation_policy_url = https://fixture.repo/policies/preservation

[generic]
evaluator = generic
oai_endpoint = {repo_server}/oai
landing_url_template = {repo_server}/handle/{{id}}
""",
        encoding="utf-8",
    )
    return path


@pytest.fixture(scope="session")
def service_config_file(plugin_ini, tmp_path_factory) -> Path:
    path = tmp_path_factory.mktemp("service") / "service.yaml"
    path.write_text(
        f"""
service:
  port: 8099
  plugin_config: {plugin_ini}
  base_namespace: https://assessments.fixture.repo/ns/
""",
        encoding="utf-8",
    )
    return path


@pytest.fixture(scope="session")
def assessment_service(plugin_ini):
    from fairmeter.engine import AssessmentService
    from fairmeter.plugins import build_plugins
    from fairmeter.registry import load_registry

    registry = load_registry()
    return AssessmentService(registry, build_plugins(plugin_ini, registry))


@pytest.fixture(scope="session")
def api_client(service_config_file):
    from fastapi.testclient import TestClient

    from fairmeter.service import create_app, load_service_config

    app = create_app(load_service_config(service_config_file))
    with TestClient(app) as client:
        yield client


@pytest.fixture
def context_factory():
    """Builds pure, offline evaluation contexts for unit tests."""

    def make(
        elements=(),
        links=(),
        formats=STD_FORMATS,
        landing_status=200,
        oai_reachable=True,
        config=None,
        identifier=f"http://hdl.handle.net/{RICH_ID}",
        source=MetadataSource.OAI_PMH,
    ) -> EvaluationContext:
        subject = resolve_identifier(identifier)
        built = tuple(
            element
            if isinstance(element, MetadataElement)
            else MetadataElement(term=element[0], value=element[1], source=source)
            for element in elements
        )
        return EvaluationContext(
            subject=subject,
            metadata=MetadataRecord(subject=subject, elements=built, available_formats=tuple(formats)),
            landing_links=tuple(
                link if isinstance(link, TypedLink) else TypedLink(*link) for link in links
            ),
            oai_formats=tuple(formats),
            plugin_config=config or PluginConfig(plugin_id="generic"),
            landing_status=landing_status,
            oai_reachable=oai_reachable,
        )

    return make
