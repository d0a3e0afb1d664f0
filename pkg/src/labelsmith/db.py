"""Relational storage: engine setup, forward-only migrations, transactions.

The reference deployment is SQLite (embedded, used by the test suite); any
SQLAlchemy URL can be supplied instead. Writes run under ``BEGIN IMMEDIATE``
so the scheduler and the response chains get a fully serialized history,
which is the isolation contract the assignment engine relies on.
"""

from __future__ import annotations

import time
from contextlib import contextmanager

from sqlalchemy import create_engine, event, text
from sqlalchemy.exc import OperationalError
from sqlalchemy.orm import Session, sessionmaker

from .errors import ConflictError
from .model import rfc3339, utcnow

TRANSACT_ATTEMPTS = 3

# Version 1 carries the whole base schema; later migrations append only.
MIGRATIONS: list[tuple[int, str, list[str]]] = [
    (
        1,
        "base schema",
        [
            """
            CREATE TABLE users (
                id TEXT PRIMARY KEY,
                email TEXT NOT NULL,
                display_name TEXT NOT NULL,
                role TEXT NOT NULL CHECK (role IN ('contributor', 'admin')),
                is_demo BOOLEAN NOT NULL DEFAULT 0,
                is_active BOOLEAN NOT NULL DEFAULT 1,
                created_at TEXT NOT NULL
            )
            """,
            "CREATE UNIQUE INDEX ux_users_active_email ON users (email) WHERE is_active",
            """
            CREATE TABLE projects (
                id TEXT PRIMARY KEY,
                name TEXT NOT NULL,
                is_active BOOLEAN NOT NULL DEFAULT 1,
                created_at TEXT NOT NULL
            )
            """,
            "CREATE UNIQUE INDEX ux_projects_active_name ON projects (name) WHERE is_active",
            """
            CREATE TABLE source_files (
                id TEXT PRIMARY KEY,
                project_id TEXT NOT NULL REFERENCES projects (id),
                relative_path TEXT NOT NULL,
                content TEXT NOT NULL,
                required_responses INTEGER NOT NULL CHECK (required_responses >= 1),
                is_accepting BOOLEAN NOT NULL DEFAULT 1,
                created_at TEXT NOT NULL,
                UNIQUE (project_id, relative_path)
            )
            """,
            """
            CREATE TABLE pattern_options (
                id TEXT PRIMARY KEY,
                name TEXT NOT NULL,
                is_listed BOOLEAN NOT NULL DEFAULT 1,
                is_active BOOLEAN NOT NULL DEFAULT 1
            )
            """,
            "CREATE UNIQUE INDEX ux_patterns_active_name ON pattern_options (lower(name)) WHERE is_active",
            """
            CREATE TABLE responses (
                id TEXT PRIMARY KEY,
                file_id TEXT NOT NULL REFERENCES source_files (id),
                user_id TEXT NOT NULL REFERENCES users (id),
                version_seq INTEGER NOT NULL CHECK (version_seq >= 1),
                pattern_id TEXT NOT NULL REFERENCES pattern_options (id),
                pattern_explanation TEXT NOT NULL,
                confidence_level INTEGER NOT NULL CHECK (confidence_level BETWEEN 1 AND 5),
                confidence_explanation TEXT NOT NULL,
                summary TEXT NOT NULL,
                notes TEXT NOT NULL DEFAULT '',
                submitted_at TEXT NOT NULL,
                UNIQUE (file_id, user_id, version_seq)
            )
            """,
            "CREATE INDEX ix_responses_file ON responses (file_id)",
            "CREATE INDEX ix_responses_user ON responses (user_id)",
            """
            CREATE TABLE assignments (
                user_id TEXT NOT NULL REFERENCES users (id),
                file_id TEXT NOT NULL REFERENCES source_files (id),
                state TEXT NOT NULL CHECK (state IN ('active', 'completed')),
                assigned_at TEXT NOT NULL,
                PRIMARY KEY (user_id, file_id)
            )
            """,
            "CREATE UNIQUE INDEX ux_assignments_one_active ON assignments (user_id) WHERE state = 'active'",
            """
            CREATE TABLE upload_jobs (
                id TEXT PRIMARY KEY,
                project_id TEXT NOT NULL REFERENCES projects (id),
                state TEXT NOT NULL CHECK (state IN ('pending', 'extracting', 'completed', 'failed')),
                files_total INTEGER NOT NULL DEFAULT 0,
                files_registered INTEGER NOT NULL DEFAULT 0,
                entries_skipped INTEGER NOT NULL DEFAULT 0,
                error_detail TEXT,
                started_at TEXT NOT NULL,
                finished_at TEXT
            )
            """,
            """
            CREATE TABLE session_tokens (
                token TEXT PRIMARY KEY,
                user_id TEXT NOT NULL REFERENCES users (id),
                expires_at TEXT NOT NULL,
                issued_via TEXT NOT NULL CHECK (issued_via IN ('oauth', 'demo'))
            )
            """,
            "CREATE TABLE settings (key TEXT PRIMARY KEY, value TEXT NOT NULL)",
        ],
    ),
    (
        2,
        "seed reserved pattern option",
        [
            """
            INSERT INTO pattern_options (id, name, is_listed, is_active)
            VALUES (lower(hex(randomblob(16))), 'None', 1, 1)
            """,
        ],
    ),
]

SCHEMA_VERSION = MIGRATIONS[-1][0]


def make_engine(database_url: str):
    """Create an engine; SQLite connections get serialized write semantics."""
    is_sqlite = database_url.startswith("sqlite")
    kwargs = {}
    if is_sqlite:
        kwargs["connect_args"] = {"timeout": 60, "check_same_thread": False}
    engine = create_engine(database_url, future=True, **kwargs)

    if is_sqlite:

        @event.listens_for(engine, "connect")
        def _configure(dbapi_conn, _record):
            # Take over transaction control from the sqlite3 driver so every
            # transaction starts with BEGIN IMMEDIATE (single-writer
            # serialization; see module docstring).
            dbapi_conn.isolation_level = None
            cursor = dbapi_conn.cursor()
            cursor.execute("PRAGMA foreign_keys=ON")
            cursor.execute("PRAGMA busy_timeout=60000")
            cursor.close()

        @event.listens_for(engine, "begin")
        def _begin(conn):
            conn.exec_driver_sql("BEGIN IMMEDIATE")

    return engine


def session_factory(engine) -> sessionmaker:
    return sessionmaker(bind=engine, future=True, expire_on_commit=False)


def current_schema_version(engine) -> int:
    with engine.connect() as conn:
        exists = conn.execute(
            text(
                "SELECT name FROM sqlite_master"
                " WHERE type = 'table' AND name = 'schema_migrations'"
            )
        ).fetchone()
        if not exists:
            return 0
        row = conn.execute(
            text("SELECT max(version) FROM schema_migrations")
        ).fetchone()
        return row[0] or 0


def migrate(engine, target: int | None = None) -> list[str]:
    """Apply pending migrations up to ``target`` (default: latest).

    Forward-only: a target below the current version is rejected. Re-running
    applies nothing. Returns the names of migrations applied this call.
    """
    if target is None:
        target = SCHEMA_VERSION
    with engine.begin() as conn:
        conn.execute(
            text(
                "CREATE TABLE IF NOT EXISTS schema_migrations ("
                " version INTEGER PRIMARY KEY,"
                " name TEXT NOT NULL,"
                " applied_at TEXT NOT NULL)"
            )
        )
        row = conn.execute(text("SELECT max(version) FROM schema_migrations")).fetchone()
        current = row[0] or 0
        if target < current:
            raise ConflictError(
                f"cannot migrate backwards: current schema {current}, target {target}"
            )
        applied = []
        for version, name, statements in MIGRATIONS:
            if version <= current or version > target:
                continue
            for statement in statements:
                try:
                    conn.execute(text(statement))
                except Exception as exc:
                    raise RuntimeError(
                        f"migration {version} ({name}) failed at: "
                        f"{' '.join(statement.split())[:80]}"
                    ) from exc
            conn.execute(
                text(
                    "INSERT INTO schema_migrations (version, name, applied_at)"
                    " VALUES (:v, :n, :t)"
                ),
                {"v": version, "n": name, "t": rfc3339(utcnow())},
            )
            applied.append(name)
        return applied


def _is_serialization_error(exc: OperationalError) -> bool:
    msg = str(exc.orig) if exc.orig is not None else str(exc)
    return "database is locked" in msg or "database table is locked" in msg


def transact(factory: sessionmaker, work, attempts: int = TRANSACT_ATTEMPTS):
    """Run ``work(session)`` in one all-or-nothing transaction.

    Serialization conflicts are retried up to ``attempts`` times and then
    surfaced as a ConflictError (409 at the API layer).
    """
    last: Exception | None = None
    for attempt in range(attempts):
        session: Session = factory()
        try:
            result = work(session)
            session.commit()
            return result
        except OperationalError as exc:
            session.rollback()
            if not _is_serialization_error(exc):
                raise
            last = exc
            time.sleep(0.05 * (attempt + 1))
        except Exception:
            session.rollback()
            raise
        finally:
            session.close()
    raise ConflictError("transaction could not be serialized") from last


@contextmanager
def read_session(factory: sessionmaker):
    """Read-only session; rolls back instead of committing."""
    session = factory()
    try:
        yield session
    finally:
        session.rollback()
        session.close()
