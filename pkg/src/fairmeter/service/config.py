"""Service-level configuration: one YAML document with a `service` section.

Plugin calibration stays in its own INI file (see plugin_config); the
service document points at it and carries deployment-wide settings such
as the port, translations directory, the weights file and the export
namespaces. The weights file is a flat YAML map config_key -> weight.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Optional

import yaml

from ..errors import MalformedValue

DEFAULT_BASE_NAMESPACE = "https://example.org/fairmeter/"
DEFAULT_FAIR_VOCABULARY = "https://w3id.org/fair/principles/terms/"


def packaged_plugins_ini() -> Path:
    return Path(str(resources.files("fairmeter.data").joinpath("plugins.ini")))


@dataclass(frozen=True)
class ServiceConfig:
    port: int = 8000
    plugin_config: Path = field(default_factory=packaged_plugins_ini)
    translations_dir: Optional[Path] = None
    weights_file: Optional[Path] = None
    base_namespace: str = DEFAULT_BASE_NAMESPACE
    fair_vocabulary: str = DEFAULT_FAIR_VOCABULARY


def load_weights_file(path: Path | str) -> dict[str, float]:
    try:
        payload = yaml.safe_load(Path(path).read_text("utf-8")) or {}
    except yaml.YAMLError as exc:
        raise MalformedValue(f"{path}: {exc}") from exc
    if not isinstance(payload, dict):
        raise MalformedValue(f"{path}: expected a flat mapping of indicator -> weight")
    weights = {}
    for key, value in payload.items():
        try:
            weights[str(key)] = float(value)
        except (TypeError, ValueError) as exc:
            raise MalformedValue(f"{path}: weight for {key!r} is not numeric") from exc
    return weights


def load_service_config(path: Optional[Path | str]) -> ServiceConfig:
    """Read the service YAML; a missing path yields packaged defaults."""
    if path is None:
        return ServiceConfig()
    path = Path(path)
    try:
        payload = yaml.safe_load(path.read_text("utf-8")) or {}
    except FileNotFoundError:
        raise MalformedValue(f"service config not found: {path}") from None
    except yaml.YAMLError as exc:
        raise MalformedValue(f"{path}: {exc}") from exc
    section = payload.get("service", payload)
    if not isinstance(section, dict):
        raise MalformedValue(f"{path}: expected a 'service' mapping")

    def path_for(key: str) -> Optional[Path]:
        value = section.get(key)
        if not value:
            return None
        candidate = Path(str(value))
        return candidate if candidate.is_absolute() else path.parent / candidate

    try:
        port = int(section.get("port", 8000))
    except (TypeError, ValueError) as exc:
        raise MalformedValue(f"{path}: port is not an integer") from exc
    return ServiceConfig(
        port=port,
        plugin_config=path_for("plugin_config") or packaged_plugins_ini(),
        translations_dir=path_for("translations_dir"),
        weights_file=path_for("weights_file"),
        base_namespace=str(section.get("base_namespace", DEFAULT_BASE_NAMESPACE)),
        fair_vocabulary=str(section.get("fair_vocabulary", DEFAULT_FAIR_VOCABULARY)),
    )
