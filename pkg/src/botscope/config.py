"""Service configuration from defaults, an optional JSON file, and env overrides."""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, fields, replace

from .errors import MissingFile, ParseError, SchemaError

ENV_PREFIX = "BOTSCOPE_"


@dataclass(frozen=True)
class ServiceConfig:
    host: str = "127.0.0.1"
    port: int = 8000
    model_path: str = "suite.bsm"
    store_path: str = "scores.log"
    source_kind: str = "fixture"
    source_root: str = "fixtures"
    source_url: str = ""
    source_token_env: str = ""
    rate_limit: int = 180
    rate_window_seconds: float = 900.0
    key_mode: str = "header_or_host"
    cors_origin: str = "*"

    def __post_init__(self):
        if self.port < 1 or self.port > 65535:
            raise SchemaError("port must be in [1, 65535]", field="port")
        if self.source_kind not in ("fixture", "http"):
            raise SchemaError("source_kind must be 'fixture' or 'http'", field="source_kind")
        if self.rate_limit < 1:
            raise SchemaError("rate_limit must be >= 1", field="rate_limit")
        if self.rate_window_seconds <= 0:
            raise SchemaError("rate_window_seconds must be > 0", field="rate_window_seconds")
        if self.key_mode not in ("header_or_host", "host"):
            raise SchemaError("key_mode must be 'header_or_host' or 'host'", field="key_mode")


_ENV_KEYS = {
    "host": "HOST",
    "port": "PORT",
    "model_path": "MODEL",
    "store_path": "STORE",
    "source_kind": "SOURCE_KIND",
    "source_root": "SOURCE_ROOT",
    "source_url": "SOURCE_URL",
    "source_token_env": "SOURCE_TOKEN_ENV",
    "rate_limit": "RATE_LIMIT",
    "rate_window_seconds": "RATE_WINDOW",
    "key_mode": "KEY_MODE",
    "cors_origin": "CORS_ORIGIN",
}


def _coerce(name: str, kind: type, raw, source: str):
    if kind is int:
        try:
            return int(raw)
        except (TypeError, ValueError):
            raise SchemaError(f"{source}: {name} must be an integer", field=name) from None
    if kind is float:
        try:
            return float(raw)
        except (TypeError, ValueError):
            raise SchemaError(f"{source}: {name} must be a number", field=name) from None
    if not isinstance(raw, str):
        raise SchemaError(f"{source}: {name} must be a string", field=name)
    return raw


def load_config(path: str | None = None, env: dict[str, str] | None = None) -> ServiceConfig:
    """Defaults, overridden by JSON file keys, overridden by BOTSCOPE_* env vars."""
    env = os.environ if env is None else env
    cfg = ServiceConfig()
    by_name = {f.name: f.type for f in fields(ServiceConfig)}
    types = {"port": int, "rate_limit": int, "rate_window_seconds": float}

    if path is not None:
        try:
            with open(path, "r", encoding="utf-8") as fh:
                doc = json.load(fh)
        except FileNotFoundError:
            raise MissingFile(f"config file not found: {path}") from None
        except OSError as exc:
            raise ParseError(f"cannot read config {path}: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise ParseError(f"config {path} is not valid JSON: {exc}") from exc
        if not isinstance(doc, dict):
            raise SchemaError("config root must be an object")
        for key, raw in doc.items():
            if key not in by_name:
                raise SchemaError(f"unknown config key: {key}", field=key)
            cfg = replace(cfg, **{key: _coerce(key, types.get(key, str), raw, path)})

    for name, suffix in _ENV_KEYS.items():
        raw = env.get(ENV_PREFIX + suffix)
        if raw is not None:
            cfg = replace(cfg, **{name: _coerce(name, types.get(name, str), raw, "environment")})
    return cfg
