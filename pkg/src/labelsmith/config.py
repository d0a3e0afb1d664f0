"""Service configuration: one YAML file plus environment overrides.

Environment variables win over the file; both win over defaults. Settings
that admins may change at runtime (demo mode, retention, default quota) are
seeded into the database from this config on first start and owned by the
settings endpoint afterwards.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field

import yaml


@dataclass(frozen=True)
class OAuthConfig:
    token_url: str = ""
    userinfo_url: str = ""
    client_id: str = ""
    client_secret: str = ""


@dataclass(frozen=True)
class AppConfig:
    database_url: str = "sqlite:///labelsmith.db"
    listen_host: str = "127.0.0.1"
    listen_port: int = 8080
    demo_mode: bool = False
    demo_retention_days: int = 7
    default_required_responses: int = 3
    request_cap_per_minute: int = 0
    oauth: OAuthConfig = field(default_factory=OAuthConfig)


_ENV_PREFIX = "LABELSMITH_"


def _as_bool(value: str) -> bool:
    return value.strip().lower() in ("1", "true", "yes", "on")


def load_config(path: str | None = None, env: dict | None = None) -> AppConfig:
    """Build the effective configuration from defaults, file, environment."""
    env = os.environ if env is None else env
    data: dict = {}
    if path:
        with open(path, "r", encoding="utf-8") as fh:
            data = yaml.safe_load(fh) or {}

    oauth_data = data.get("oauth") or {}

    def pick(key: str, default, cast=str):
        env_key = _ENV_PREFIX + key.upper()
        if env_key in env:
            raw = env[env_key]
            return _as_bool(raw) if cast is bool else cast(raw)
        if key in data:
            value = data[key]
            return cast(value) if not isinstance(value, cast) else value
        return default

    def pick_oauth(key: str) -> str:
        env_key = f"{_ENV_PREFIX}OAUTH_{key.upper()}"
        if env_key in env:
            return env[env_key]
        return str(oauth_data.get(key, ""))

    return AppConfig(
        database_url=pick("database_url", AppConfig.database_url),
        listen_host=pick("listen_host", AppConfig.listen_host),
        listen_port=pick("listen_port", AppConfig.listen_port, int),
        demo_mode=pick("demo_mode", AppConfig.demo_mode, bool),
        demo_retention_days=pick(
            "demo_retention_days", AppConfig.demo_retention_days, int
        ),
        default_required_responses=pick(
            "default_required_responses", AppConfig.default_required_responses, int
        ),
        request_cap_per_minute=pick(
            "request_cap_per_minute", AppConfig.request_cap_per_minute, int
        ),
        oauth=OAuthConfig(
            token_url=pick_oauth("token_url"),
            userinfo_url=pick_oauth("userinfo_url"),
            client_id=pick_oauth("client_id"),
            client_secret=pick_oauth("client_secret"),
        ),
    )
