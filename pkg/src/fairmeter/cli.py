"""Command-line client: single/batch evaluation, service launch, graph export.

The CLI always goes through the HTTP surface: either a remote instance
(--api-url) or an in-process application built from the same service
configuration, so its JSON output is the API response body, byte for
byte.

Exit codes: 0 success, 1 usage or configuration error, 2 network or
harvest failure, 3 unknown plugin or indicator, 4 partial batch failure.
"""

from __future__ import annotations

import asyncio
import json
import sys
from pathlib import Path
from typing import Optional

import click
import httpx

from . import __version__, reports
from .errors import FairmeterError
from .semantics import export_test_graph

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_NETWORK = 2
EXIT_UNKNOWN_TARGET = 3
EXIT_PARTIAL = 4

_STATUS_EXIT = {400: EXIT_USAGE, 404: EXIT_UNKNOWN_TARGET, 502: EXIT_NETWORK}


class ApiClient:
    """POSTs against a remote base URL or an in-process application."""

    def __init__(self, config_path: Optional[str], api_url: Optional[str]):
        self.api_url = api_url
        self.app = None
        if api_url is None:
            from .service import create_app_from_file

            self.app = create_app_from_file(config_path)

    def post(self, path: str, payload: dict) -> httpx.Response:
        if self.api_url is not None:
            try:
                return httpx.post(self.api_url.rstrip("/") + path, json=payload, timeout=300.0)
            except httpx.HTTPError as exc:
                raise click.ClickException(f"cannot reach {self.api_url}: {exc}") from exc

        async def _call() -> httpx.Response:
            transport = httpx.ASGITransport(app=self.app)
            async with httpx.AsyncClient(
                transport=transport, base_url="http://fairmeter.internal", timeout=300.0
            ) as client:
                return await client.post(path, json=payload)

        return asyncio.run(_call())


def _exit_for_status(status_code: int) -> int:
    return _STATUS_EXIT.get(status_code, EXIT_USAGE)


def _render(body: str, output_format: str) -> str:
    if output_format == "json":
        return body
    report = json.loads(body)
    if output_format == "markdown":
        return reports.render_markdown(report)
    return reports.render_html(report)


_EXTENSIONS = {"json": "json", "markdown": "md", "html": "html"}


@click.group()
@click.version_option(version=__version__, prog_name="fairmeter")
def main() -> None:
    """Assess how FAIR a repository-held digital object is."""


@main.command()
@click.option("--id", "identifier", required=True, help="Identifier to assess (DOI, Handle or URL).")
@click.option("--plugin", "plugin_id", required=True, help="Repository plugin id.")
@click.option("--lang", default="en", show_default=True, help="Locale for feedback texts.")
@click.option(
    "--format", "output_format", type=click.Choice(["json", "markdown", "html"]),
    default="json", show_default=True,
)
@click.option("--config", "config_path", type=click.Path(), default=None, help="Service YAML file.")
@click.option("--api-url", default=None, help="Base URL of a running instance; default runs in-process.")
@click.option("--out", "out_path", type=click.Path(), default=None, help="Write the report here instead of stdout.")
def evaluate(identifier, plugin_id, lang, output_format, config_path, api_url, out_path) -> None:
    """Run a full assessment of one digital object."""
    client = ApiClient(config_path, api_url)
    response = client.post("/v1.0/rda/rda_all", {"id": identifier, "repo": plugin_id, "lang": lang})
    if response.status_code != 200:
        click.echo(f"evaluation failed ({response.status_code}): {response.text}", err=True)
        sys.exit(_exit_for_status(response.status_code))
    rendered = _render(response.text, output_format)
    if out_path:
        Path(out_path).write_text(rendered, encoding="utf-8")
        click.echo(f"report written to {out_path}")
    else:
        click.echo(rendered)


@main.command()
@click.option("--input", "input_path", required=True, type=click.Path(exists=True),
              help="File with one identifier per line; # starts a comment.")
@click.option("--plugin", "plugin_id", required=True)
@click.option("--out", "out_dir", required=True, type=click.Path(), help="Directory for the reports.")
@click.option("--lang", default="en", show_default=True)
@click.option("--format", "output_format", type=click.Choice(["json", "markdown", "html"]),
              default="json", show_default=True)
@click.option("--config", "config_path", type=click.Path(), default=None)
@click.option("--api-url", default=None)
def batch(input_path, plugin_id, out_dir, lang, output_format, config_path, api_url) -> None:
    """Assess many identifiers and write one report each plus a summary table."""
    identifiers = []
    for line in Path(input_path).read_text("utf-8").splitlines():
        entry = line.split("#", 1)[0].strip()
        if entry:
            identifiers.append(entry)
    if not identifiers:
        raise click.ClickException("input file contains no identifiers")

    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    client = ApiClient(config_path, api_url)
    extension = _EXTENSIONS[output_format]
    rows = []
    failures = 0
    for identifier in identifiers:
        response = client.post(
            "/v1.0/rda/rda_all", {"id": identifier, "repo": plugin_id, "lang": lang}
        )
        safe_name = identifier.replace("/", "_").replace(":", "_")
        if response.status_code == 200:
            (out / f"{safe_name}.{extension}").write_text(
                _render(response.text, output_format), encoding="utf-8"
            )
            report = response.json()
            rows.append(
                {
                    "id": identifier,
                    "status": "ok",
                    "total": report["total_score"],
                    "groups": report["group_scores"],
                }
            )
        else:
            failures += 1
            rows.append({"id": identifier, "status": f"failed ({response.status_code})"})
            click.echo(f"{identifier}: failed with status {response.status_code}", err=True)

    summary_lines = ["| id | total | F | A | I | R | status |", "| --- | --- | --- | --- | --- | --- | --- |"]
    for row in rows:
        if row["status"] == "ok":
            groups = row["groups"]
            summary_lines.append(
                f"| {row['id']} | {row['total']:.2f} | "
                + " | ".join(f"{groups[g]:.2f}" for g in "FAIR")
                + " | ok |"
            )
        else:
            summary_lines.append(f"| {row['id']} | - | - | - | - | - | {row['status']} |")
    (out / "summary.md").write_text("\n".join(summary_lines) + "\n", encoding="utf-8")
    (out / "summary.json").write_text(json.dumps(rows, indent=2) + "\n", encoding="utf-8")
    click.echo(f"{len(rows) - failures}/{len(rows)} assessments written to {out}")

    if failures == len(rows):
        sys.exit(EXIT_NETWORK)
    if failures:
        sys.exit(EXIT_PARTIAL)


@main.command()
@click.option("--config", "config_path", type=click.Path(), default=None, help="Service YAML file.")
@click.option("--port", type=int, default=None, help="Override the configured port; 0 binds an ephemeral one.")
@click.option("--host", default="127.0.0.1", show_default=True)
def serve(config_path, port, host) -> None:
    """Launch the HTTP service."""
    import uvicorn

    from .service import create_app_from_file, load_service_config

    try:
        service_config = load_service_config(config_path)
        app = create_app_from_file(config_path)
    except FairmeterError as exc:
        raise click.ClickException(str(exc)) from exc
    uvicorn.run(app, host=host, port=port if port is not None else service_config.port)


@main.command("export-ontology")
@click.option("--out", "out_path", required=True, type=click.Path(), help="Output Turtle file.")
@click.option("--plugin", "plugin_id", default="generic", show_default=True)
@click.option("--config", "config_path", type=click.Path(), default=None)
@click.option("--base-namespace", default=None, help="Override the configured base namespace.")
def export_ontology(out_path, plugin_id, config_path, base_namespace) -> None:
    """Write the test/indicator/principle knowledge graph as Turtle."""
    from .service import load_service_config
    from .service.app import build_service

    try:
        service_config = load_service_config(config_path)
        service = build_service(service_config)
        plugin = service.plugin(plugin_id)
        graph = export_test_graph(
            service.registry,
            plugin,
            base_namespace or service_config.base_namespace,
            service_config.fair_vocabulary,
        )
    except FairmeterError as exc:
        click.echo(f"export failed: {exc}", err=True)
        sys.exit(EXIT_UNKNOWN_TARGET if "plugin" in type(exc).__name__.lower() else EXIT_USAGE)
    Path(out_path).write_text(graph, encoding="utf-8")
    click.echo(f"ontology written to {out_path}")


if __name__ == "__main__":
    main()
