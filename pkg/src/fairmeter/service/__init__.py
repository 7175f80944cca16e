from .app import create_app, create_app_from_file
from .config import ServiceConfig, load_service_config

__all__ = ["ServiceConfig", "create_app", "create_app_from_file", "load_service_config"]
