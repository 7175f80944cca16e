"""HTTP surface of the evaluator.

One POST endpoint runs the full assessment; one POST endpoint per
indicator (registered from the registry at startup, so the served
interface description lists every indicator path) runs a single test
over a freshly assembled context. All shared state is read-only, so the
service is stateless and horizontally replicable.
"""

from __future__ import annotations

from datetime import datetime, timezone
from typing import Optional

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from .. import __version__
from ..engine import AssessmentService
from ..errors import (
    EmptyIdentifier,
    FairmeterError,
    HarvestFailure,
    UnknownIndicator,
    UnknownPlugin,
)
from ..plugins import build_plugins
from ..registry import load_registry
from .config import ServiceConfig, load_service_config, load_weights_file
from .schemas import (
    EvaluationReport,
    EvaluationRequest,
    HealthInfo,
    SingleIndicatorReport,
    build_report,
    build_single_report,
)

API_PREFIX = "/v1.0/rda"


def build_service(config: Optional[ServiceConfig] = None) -> AssessmentService:
    config = config or ServiceConfig()
    weights = load_weights_file(config.weights_file) if config.weights_file else None
    registry = load_registry(weights)
    plugins = build_plugins(config.plugin_config, registry)
    return AssessmentService(registry, plugins, translations_dir=config.translations_dir)


def create_app(config: Optional[ServiceConfig] = None) -> FastAPI:
    config = config or ServiceConfig()
    service = build_service(config)

    app = FastAPI(
        title="fairmeter",
        version=__version__,
        description=(
            "FAIR-compliance assessment of repository-held digital objects: "
            "per-indicator tests, weighted scores and improvement feedback."
        ),
        openapi_url="/v1.0/api-spec",
    )
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["*"], allow_headers=["*"]
    )
    app.state.service = service
    app.state.config = config

    @app.exception_handler(RequestValidationError)
    async def validation_handler(request: Request, exc: RequestValidationError):
        return JSONResponse(status_code=400, content={"detail": exc.errors()})

    @app.exception_handler(FairmeterError)
    async def domain_error_handler(request: Request, exc: FairmeterError):
        if isinstance(exc, (UnknownPlugin, UnknownIndicator)):
            status = 404
        elif isinstance(exc, HarvestFailure):
            status = 502
        elif isinstance(exc, EmptyIdentifier):
            status = 400
        else:
            status = 500
        return JSONResponse(
            status_code=status, content={"detail": f"{type(exc).__name__}: {exc}"}
        )

    @app.get("/health", response_model=HealthInfo)
    def health() -> HealthInfo:
        return HealthInfo(status="ok", version=__version__)

    @app.post(f"{API_PREFIX}/rda_all", response_model=EvaluationReport)
    def rda_all(request: EvaluationRequest) -> EvaluationReport:
        assessment = service.evaluate(request.id, request.repo, request.lang)
        return build_report(service, assessment)

    def _register_indicator_route(config_key: str) -> None:
        indicator = service.registry.get(config_key)

        def run_single(request: EvaluationRequest) -> SingleIndicatorReport:
            started = datetime.now(timezone.utc)
            result, context = service.evaluate_single(
                request.id, config_key, request.repo, request.lang
            )
            return build_single_report(
                service,
                indicator.id,
                result,
                context,
                request.repo,
                request.lang,
                started.isoformat(),
                datetime.now(timezone.utc).isoformat(),
            )

        app.add_api_route(
            f"{API_PREFIX}/{config_key}",
            run_single,
            methods=["POST"],
            response_model=SingleIndicatorReport,
            name=config_key,
            summary=indicator.description,
            openapi_extra={
                "x-indicator": {
                    "id": indicator.id,
                    "group": indicator.group.value,
                    "level": indicator.priority.value,
                    "weight": service.registry.weights[indicator.config_key],
                    "dependency": indicator.dependency.value,
                }
            },
        )

    for key in service.registry.config_keys():
        _register_indicator_route(key)

    return app


def create_app_from_file(path: Optional[str] = None) -> FastAPI:
    return create_app(load_service_config(path))
