"""HTTP facade wiring: app factory, error mapping, global request cap."""

from __future__ import annotations

import threading
import time
from collections import deque

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from sqlalchemy import text
from starlette.exceptions import HTTPException as StarletteHTTPException

from .. import __version__, store
from ..config import AppConfig
from ..db import make_engine, migrate, session_factory, transact
from ..errors import (
    AuthenticationError,
    AuthorizationError,
    ConflictError,
    NotFoundError,
    ValidationFailure,
)
from ..ingest import IngestWorker
from .auth import HttpIdentityProvider, IdentityProvider
from .routes import admin_router, api_router, auth_router

_STATUS_CODES = {
    401: "unauthenticated",
    403: "forbidden",
    404: "not_found",
    405: "method_not_allowed",
    409: "conflict",
    422: "validation_failed",
    429: "rate_limited",
}


def _error_body(status: int, message: str, details: list | None = None) -> dict:
    return {
        "code": _STATUS_CODES.get(status, f"http_{status}"),
        "message": message,
        "details": details or [],
    }


class _RequestCap:
    """Global sliding-window cap on requests per minute; 0 disables it."""

    def __init__(self, per_minute: int):
        self.per_minute = per_minute
        self._events: deque[float] = deque()
        self._lock = threading.Lock()

    def admit(self) -> bool:
        if self.per_minute <= 0:
            return True
        now = time.monotonic()
        with self._lock:
            while self._events and now - self._events[0] > 60.0:
                self._events.popleft()
            if len(self._events) >= self.per_minute:
                return False
            self._events.append(now)
            return True


def _seed_runtime_settings(factory, config: AppConfig) -> None:
    """Copy config values into the settings table, absent keys only."""
    desired = {
        "default_required_responses": str(config.default_required_responses),
        "demo_mode": "true" if config.demo_mode else "false",
        "demo_retention_days": str(config.demo_retention_days),
    }

    def work(session):
        present = {
            row.key
            for row in session.execute(text("SELECT key FROM settings")).fetchall()
        }
        for key, value in desired.items():
            if key not in present:
                store.set_setting(session, key, value)

    transact(factory, work)


def create_app(
    config: AppConfig,
    identity_provider: IdentityProvider | None = None,
    engine=None,
) -> FastAPI:
    """Build a ready-to-serve application bound to its own engine/worker."""
    engine = engine if engine is not None else make_engine(config.database_url)
    migrate(engine)
    factory = session_factory(engine)
    _seed_runtime_settings(factory, config)

    app = FastAPI(
        title="Labelsmith",
        version=__version__,
        docs_url=None,
        redoc_url=None,
        openapi_url=None,
    )
    app.state.config = config
    app.state.engine = engine
    app.state.factory = factory
    app.state.identity_provider = identity_provider or HttpIdentityProvider(config.oauth)
    app.state.ingest_worker = IngestWorker(factory)
    cap = _RequestCap(config.request_cap_per_minute)

    @app.middleware("http")
    async def request_cap(request: Request, call_next):
        if not cap.admit():
            return JSONResponse(
                status_code=429,
                content=_error_body(429, "global request cap exceeded"),
            )
        return await call_next(request)

    def _handler(status: int):
        def handle(request: Request, exc: Exception):
            details = exc.violations if isinstance(exc, ValidationFailure) else []
            return JSONResponse(
                status_code=status, content=_error_body(status, str(exc), details)
            )

        return handle

    app.add_exception_handler(AuthenticationError, _handler(401))
    app.add_exception_handler(AuthorizationError, _handler(403))
    app.add_exception_handler(NotFoundError, _handler(404))
    app.add_exception_handler(ConflictError, _handler(409))
    app.add_exception_handler(ValidationFailure, _handler(422))

    @app.exception_handler(RequestValidationError)
    async def handle_request_validation(request: Request, exc: RequestValidationError):
        details = [
            f"{'.'.join(str(loc) for loc in err.get('loc', []))}: {err.get('msg', '')}"
            for err in exc.errors()
        ]
        return JSONResponse(
            status_code=422,
            content=_error_body(422, "request validation failed", details),
        )

    @app.exception_handler(StarletteHTTPException)
    async def handle_http_exception(request: Request, exc: StarletteHTTPException):
        return JSONResponse(
            status_code=exc.status_code,
            content=_error_body(exc.status_code, str(exc.detail)),
        )

    app.include_router(auth_router)
    app.include_router(api_router)
    app.include_router(admin_router)
    return app
