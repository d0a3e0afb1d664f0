"""Repositories: row <-> entity mapping over plain SQL.

Functions here take an open Session and never commit; transaction scope is
owned by the caller (``db.transact`` or the API request handler).
"""

from __future__ import annotations

from datetime import datetime

from sqlalchemy import text
from sqlalchemy.exc import IntegrityError
from sqlalchemy.orm import Session

from .errors import ConflictError, NotFoundError, ValidationFailure
from .model import (
    Assignment,
    AssignmentState,
    DesignPatternOption,
    NO_PATTERN_NAME,
    Project,
    Response,
    Role,
    SourceFile,
    User,
    new_id,
    parse_rfc3339,
    rfc3339,
    utcnow,
    validate_entity,
)


def _ts(value: str) -> datetime:
    return parse_rfc3339(value)


# -- users -------------------------------------------------------------

def _user(row) -> User:
    return User(
        id=row.id,
        email=row.email,
        display_name=row.display_name,
        role=Role(row.role),
        is_demo=bool(row.is_demo),
        is_active=bool(row.is_active),
        created_at=_ts(row.created_at),
    )


def create_user(
    session: Session,
    email: str,
    display_name: str,
    role: Role = Role.CONTRIBUTOR,
    is_demo: bool = False,
) -> User:
    user = User(
        id=new_id(),
        email=email.strip().lower(),
        display_name=display_name,
        role=role,
        is_demo=is_demo,
        is_active=True,
        created_at=utcnow(),
    )
    violations = validate_entity(user)
    if violations:
        raise ValidationFailure(violations)
    try:
        session.execute(
            text(
                "INSERT INTO users (id, email, display_name, role, is_demo, is_active, created_at)"
                " VALUES (:id, :email, :name, :role, :demo, 1, :at)"
            ),
            {
                "id": user.id,
                "email": user.email,
                "name": user.display_name,
                "role": user.role.value,
                "demo": user.is_demo,
                "at": rfc3339(user.created_at),
            },
        )
    except IntegrityError as exc:
        raise ConflictError(f"email already enrolled: {user.email}") from exc
    return user


def get_user(session: Session, user_id: str) -> User:
    row = session.execute(
        text("SELECT * FROM users WHERE id = :id"), {"id": user_id}
    ).fetchone()
    if row is None:
        raise NotFoundError(f"user {user_id}")
    return _user(row)


def find_user_by_email(session: Session, email: str) -> User | None:
    row = session.execute(
        text("SELECT * FROM users WHERE email = :email AND is_active"),
        {"email": email.strip().lower()},
    ).fetchone()
    return _user(row) if row else None


def list_users(session: Session, limit: int = 100, offset: int = 0) -> list[User]:
    rows = session.execute(
        text("SELECT * FROM users ORDER BY created_at, email LIMIT :l OFFSET :o"),
        {"l": limit, "o": offset},
    ).fetchall()
    return [_user(r) for r in rows]


def update_user(session: Session, user_id: str, **changes) -> User:
    current = get_user(session, user_id)
    allowed = {"display_name", "role", "is_active"}
    unknown = set(changes) - allowed
    if unknown:
        raise ValidationFailure([f"unknown user field: {f}" for f in sorted(unknown)])
    merged = {
        "display_name": changes.get("display_name", current.display_name),
        "role": Role(changes["role"]) if "role" in changes else current.role,
        "is_active": changes.get("is_active", current.is_active),
    }
    updated = User(
        id=current.id,
        email=current.email,
        display_name=merged["display_name"],
        role=merged["role"],
        is_demo=current.is_demo,
        is_active=merged["is_active"],
        created_at=current.created_at,
    )
    violations = validate_entity(updated)
    if violations:
        raise ValidationFailure(violations)
    session.execute(
        text(
            "UPDATE users SET display_name = :name, role = :role, is_active = :active"
            " WHERE id = :id"
        ),
        {
            "id": user_id,
            "name": updated.display_name,
            "role": updated.role.value,
            "active": updated.is_active,
        },
    )
    return updated


# -- projects ----------------------------------------------------------

def _project(row) -> Project:
    return Project(
        id=row.id,
        name=row.name,
        is_active=bool(row.is_active),
        created_at=_ts(row.created_at),
    )


def create_project(session: Session, name: str) -> Project:
    project = Project(id=new_id(), name=name, is_active=True, created_at=utcnow())
    violations = validate_entity(project)
    if violations:
        raise ValidationFailure(violations)
    try:
        session.execute(
            text(
                "INSERT INTO projects (id, name, is_active, created_at)"
                " VALUES (:id, :name, 1, :at)"
            ),
            {"id": project.id, "name": project.name, "at": rfc3339(project.created_at)},
        )
    except IntegrityError as exc:
        raise ConflictError(f"project name in use: {name}") from exc
    return project


def get_project(session: Session, project_id: str) -> Project:
    row = session.execute(
        text("SELECT * FROM projects WHERE id = :id"), {"id": project_id}
    ).fetchone()
    if row is None:
        raise NotFoundError(f"project {project_id}")
    return _project(row)


def find_project_by_name(session: Session, name: str) -> Project | None:
    row = session.execute(
        text("SELECT * FROM projects WHERE name = :name AND is_active"),
        {"name": name},
    ).fetchone()
    return _project(row) if row else None


def list_projects(session: Session, limit: int = 100, offset: int = 0) -> list[Project]:
    rows = session.execute(
        text(
            "SELECT * FROM projects WHERE is_active"
            " ORDER BY created_at, name LIMIT :l OFFSET :o"
        ),
        {"l": limit, "o": offset},
    ).fetchall()
    return [_project(r) for r in rows]


# -- source files ------------------------------------------------------

def _file(row) -> SourceFile:
    return SourceFile(
        id=row.id,
        project_id=row.project_id,
        relative_path=row.relative_path,
        content=row.content,
        required_responses=row.required_responses,
        is_accepting=bool(row.is_accepting),
        created_at=_ts(row.created_at),
    )


def add_file(
    session: Session,
    project_id: str,
    relative_path: str,
    content: str,
    required_responses: int,
) -> SourceFile:
    source = SourceFile(
        id=new_id(),
        project_id=project_id,
        relative_path=relative_path,
        content=content,
        required_responses=required_responses,
        is_accepting=True,
        created_at=utcnow(),
    )
    violations = validate_entity(source)
    if violations:
        raise ValidationFailure(violations)
    try:
        session.execute(
            text(
                "INSERT INTO source_files"
                " (id, project_id, relative_path, content, required_responses, is_accepting, created_at)"
                " VALUES (:id, :p, :path, :content, :req, 1, :at)"
            ),
            {
                "id": source.id,
                "p": project_id,
                "path": relative_path,
                "content": content,
                "req": required_responses,
                "at": rfc3339(source.created_at),
            },
        )
    except IntegrityError as exc:
        raise ConflictError(f"duplicate path in project: {relative_path}") from exc
    return source


def get_file(session: Session, file_id: str) -> SourceFile:
    row = session.execute(
        text("SELECT * FROM source_files WHERE id = :id"), {"id": file_id}
    ).fetchone()
    if row is None:
        raise NotFoundError(f"file {file_id}")
    return _file(row)


def list_files(
    session: Session, project_id: str, limit: int = 100, offset: int = 0
) -> list[SourceFile]:
    rows = session.execute(
        text(
            "SELECT * FROM source_files WHERE project_id = :p"
            " ORDER BY relative_path LIMIT :l OFFSET :o"
        ),
        {"p": project_id, "l": limit, "o": offset},
    ).fetchall()
    return [_file(r) for r in rows]


def file_exists(session: Session, project_id: str, relative_path: str) -> bool:
    row = session.execute(
        text(
            "SELECT 1 FROM source_files"
            " WHERE project_id = :p AND relative_path = :path"
        ),
        {"p": project_id, "path": relative_path},
    ).fetchone()
    return row is not None


def update_file(
    session: Session,
    file_id: str,
    is_accepting: bool | None = None,
    required_responses: int | None = None,
) -> SourceFile:
    current = get_file(session, file_id)
    accepting = current.is_accepting if is_accepting is None else is_accepting
    required = (
        current.required_responses if required_responses is None else required_responses
    )
    if required < 1:
        raise ValidationFailure(["required_responses below 1"])
    session.execute(
        text(
            "UPDATE source_files SET is_accepting = :acc, required_responses = :req"
            " WHERE id = :id"
        ),
        {"id": file_id, "acc": accepting, "req": required},
    )
    if current.is_accepting and not accepting:
        # Deactivation releases any still-active assignments on the file.
        session.execute(
            text("DELETE FROM assignments WHERE file_id = :f AND state = 'active'"),
            {"f": file_id},
        )
    return get_file(session, file_id)


# -- pattern options ---------------------------------------------------

def _pattern(row) -> DesignPatternOption:
    return DesignPatternOption(
        id=row.id,
        name=row.name,
        is_listed=bool(row.is_listed),
        is_active=bool(row.is_active),
    )


def get_pattern(session: Session, pattern_id: str) -> DesignPatternOption:
    row = session.execute(
        text("SELECT * FROM pattern_options WHERE id = :id"), {"id": pattern_id}
    ).fetchone()
    if row is None:
        raise NotFoundError(f"pattern option {pattern_id}")
    return _pattern(row)


def find_pattern_by_name(session: Session, name: str) -> DesignPatternOption | None:
    """Case-insensitive lookup among active options."""
    row = session.execute(
        text("SELECT * FROM pattern_options WHERE lower(name) = :n AND is_active"),
        {"n": name.strip().lower()},
    ).fetchone()
    return _pattern(row) if row else None


def list_patterns(session: Session, include_inactive: bool = False) -> list[DesignPatternOption]:
    clause = "" if include_inactive else "WHERE is_active"
    rows = session.execute(
        text(f"SELECT * FROM pattern_options {clause} ORDER BY lower(name)")
    ).fetchall()
    return [_pattern(r) for r in rows]


def create_pattern(session: Session, name: str, is_listed: bool = True) -> DesignPatternOption:
    option = DesignPatternOption(
        id=new_id(), name=name.strip(), is_listed=is_listed, is_active=True
    )
    violations = validate_entity(option)
    if violations:
        raise ValidationFailure(violations)
    try:
        session.execute(
            text(
                "INSERT INTO pattern_options (id, name, is_listed, is_active)"
                " VALUES (:id, :name, :listed, 1)"
            ),
            {"id": option.id, "name": option.name, "listed": option.is_listed},
        )
    except IntegrityError as exc:
        raise ConflictError(f"pattern name in use: {option.name}") from exc
    return option


def ensure_pattern(session: Session, name: str) -> DesignPatternOption:
    """Resolve a pattern by name, creating an unlisted option when absent."""
    found = find_pattern_by_name(session, name)
    if found is not None:
        return found
    return create_pattern(session, name, is_listed=False)


def update_pattern(session: Session, pattern_id: str, **changes) -> DesignPatternOption:
    current = get_pattern(session, pattern_id)
    allowed = {"name", "is_listed", "is_active"}
    unknown = set(changes) - allowed
    if unknown:
        raise ValidationFailure([f"unknown pattern field: {f}" for f in sorted(unknown)])
    if current.name == NO_PATTERN_NAME:
        if changes.get("is_active") is False or (
            "name" in changes and changes["name"] != NO_PATTERN_NAME
        ):
            raise ConflictError("the reserved 'None' option cannot be removed")
    updated = DesignPatternOption(
        id=current.id,
        name=changes.get("name", current.name),
        is_listed=changes.get("is_listed", current.is_listed),
        is_active=changes.get("is_active", current.is_active),
    )
    violations = validate_entity(updated)
    if violations:
        raise ValidationFailure(violations)
    try:
        session.execute(
            text(
                "UPDATE pattern_options SET name = :name, is_listed = :listed,"
                " is_active = :active WHERE id = :id"
            ),
            {
                "id": pattern_id,
                "name": updated.name,
                "listed": updated.is_listed,
                "active": updated.is_active,
            },
        )
    except IntegrityError as exc:
        raise ConflictError(f"pattern name in use: {updated.name}") from exc
    return updated


# -- responses ---------------------------------------------------------

def _response(row) -> Response:
    return Response(
        id=row.id,
        file_id=row.file_id,
        user_id=row.user_id,
        version_seq=row.version_seq,
        pattern_id=row.pattern_id,
        pattern_explanation=row.pattern_explanation,
        confidence_level=row.confidence_level,
        confidence_explanation=row.confidence_explanation,
        summary=row.summary,
        notes=row.notes,
        submitted_at=_ts(row.submitted_at),
    )


def insert_response(session: Session, response: Response) -> None:
    violations = validate_entity(response)
    if violations:
        raise ValidationFailure(violations)
    session.execute(
        text(
            "INSERT INTO responses (id, file_id, user_id, version_seq, pattern_id,"
            " pattern_explanation, confidence_level, confidence_explanation, summary,"
            " notes, submitted_at)"
            " VALUES (:id, :f, :u, :seq, :p, :pe, :cl, :ce, :s, :n, :at)"
        ),
        {
            "id": response.id,
            "f": response.file_id,
            "u": response.user_id,
            "seq": response.version_seq,
            "p": response.pattern_id,
            "pe": response.pattern_explanation,
            "cl": response.confidence_level,
            "ce": response.confidence_explanation,
            "s": response.summary,
            "n": response.notes,
            "at": rfc3339(response.submitted_at),
        },
    )


def chain_length(session: Session, file_id: str, user_id: str) -> int:
    row = session.execute(
        text(
            "SELECT max(version_seq) FROM responses"
            " WHERE file_id = :f AND user_id = :u"
        ),
        {"f": file_id, "u": user_id},
    ).fetchone()
    return row[0] or 0


def response_chain(session: Session, file_id: str, user_id: str) -> list[Response]:
    rows = session.execute(
        text(
            "SELECT * FROM responses WHERE file_id = :f AND user_id = :u"
            " ORDER BY version_seq"
        ),
        {"f": file_id, "u": user_id},
    ).fetchall()
    return [_response(r) for r in rows]


def latest_responses_for_user(session: Session, user_id: str) -> list[Response]:
    rows = session.execute(
        text(
            "SELECT r.* FROM responses r"
            " JOIN (SELECT file_id, max(version_seq) AS seq FROM responses"
            "       WHERE user_id = :u GROUP BY file_id) m"
            " ON r.file_id = m.file_id AND r.version_seq = m.seq"
            " WHERE r.user_id = :u"
        ),
        {"u": user_id},
    ).fetchall()
    return [_response(r) for r in rows]


def latest_responses_for_file(session: Session, file_id: str) -> list[Response]:
    rows = session.execute(
        text(
            "SELECT r.* FROM responses r"
            " JOIN (SELECT user_id, max(version_seq) AS seq FROM responses"
            "       WHERE file_id = :f GROUP BY user_id) m"
            " ON r.user_id = m.user_id AND r.version_seq = m.seq"
            " WHERE r.file_id = :f"
        ),
        {"f": file_id},
    ).fetchall()
    return [_response(r) for r in rows]


def responder_counts(session: Session) -> dict[str, int]:
    """Distinct responders per file; versions never change the count."""
    rows = session.execute(
        text("SELECT file_id, count(DISTINCT user_id) AS n FROM responses GROUP BY file_id")
    ).fetchall()
    return {r.file_id: r.n for r in rows}


def responded_file_ids(session: Session, user_id: str) -> set[str]:
    rows = session.execute(
        text("SELECT DISTINCT file_id FROM responses WHERE user_id = :u"),
        {"u": user_id},
    ).fetchall()
    return {r.file_id for r in rows}


# -- assignments -------------------------------------------------------

def _assignment(row) -> Assignment:
    return Assignment(
        user_id=row.user_id,
        file_id=row.file_id,
        state=AssignmentState(row.state),
        assigned_at=_ts(row.assigned_at),
    )


def active_assignment(session: Session, user_id: str) -> Assignment | None:
    row = session.execute(
        text("SELECT * FROM assignments WHERE user_id = :u AND state = 'active'"),
        {"u": user_id},
    ).fetchone()
    return _assignment(row) if row else None


def create_assignment(session: Session, user_id: str, file_id: str) -> Assignment:
    assignment = Assignment(
        user_id=user_id,
        file_id=file_id,
        state=AssignmentState.ACTIVE,
        assigned_at=utcnow(),
    )
    try:
        session.execute(
            text(
                "INSERT INTO assignments (user_id, file_id, state, assigned_at)"
                " VALUES (:u, :f, 'active', :at)"
            ),
            {"u": user_id, "f": file_id, "at": rfc3339(assignment.assigned_at)},
        )
    except IntegrityError as exc:
        raise ConflictError("user already has an active assignment") from exc
    return assignment


def complete_assignment_row(session: Session, user_id: str, file_id: str) -> Assignment:
    result = session.execute(
        text(
            "UPDATE assignments SET state = 'completed'"
            " WHERE user_id = :u AND file_id = :f AND state = 'active'"
        ),
        {"u": user_id, "f": file_id},
    )
    if result.rowcount != 1:
        raise ConflictError("no active assignment for this file")
    row = session.execute(
        text("SELECT * FROM assignments WHERE user_id = :u AND file_id = :f"),
        {"u": user_id, "f": file_id},
    ).fetchone()
    return _assignment(row)


# -- settings ----------------------------------------------------------

SETTING_DEFAULTS = {
    "default_required_responses": "3",
    "demo_mode": "false",
    "demo_retention_days": "7",
}


def get_setting(session: Session, key: str) -> str:
    row = session.execute(
        text("SELECT value FROM settings WHERE key = :k"), {"k": key}
    ).fetchone()
    if row is not None:
        return row.value
    if key in SETTING_DEFAULTS:
        return SETTING_DEFAULTS[key]
    raise NotFoundError(f"setting {key}")


def set_setting(session: Session, key: str, value: str) -> None:
    if key not in SETTING_DEFAULTS:
        raise ValidationFailure([f"unknown setting: {key}"])
    session.execute(
        text(
            "INSERT INTO settings (key, value) VALUES (:k, :v)"
            " ON CONFLICT (key) DO UPDATE SET value = :v"
        ),
        {"k": key, "v": value},
    )


def all_settings(session: Session) -> dict[str, str]:
    merged = dict(SETTING_DEFAULTS)
    rows = session.execute(text("SELECT key, value FROM settings")).fetchall()
    for row in rows:
        merged[row.key] = row.value
    return merged
