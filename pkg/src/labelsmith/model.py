"""Domain entities and their intrinsic invariants.

Every entity is an immutable value object; once constructed it is safe to
share across request handlers. Cross-entity invariants (uniqueness, version
gaplessness) are enforced by the persistence layer; ``validate_entity``
covers everything checkable on a single instance.
"""

from __future__ import annotations

import uuid
from dataclasses import dataclass
from datetime import datetime, timezone
from enum import Enum


class Role(str, Enum):
    CONTRIBUTOR = "contributor"
    ADMIN = "admin"


class AssignmentState(str, Enum):
    ACTIVE = "active"
    COMPLETED = "completed"


class JobState(str, Enum):
    PENDING = "pending"
    EXTRACTING = "extracting"
    COMPLETED = "completed"
    FAILED = "failed"


#: Reserved pattern option meaning "no design pattern"; always present,
#: never deletable.
NO_PATTERN_NAME = "None"

CONFIDENCE_MIN = 1
CONFIDENCE_MAX = 5


def new_id() -> str:
    return str(uuid.uuid4())


def utcnow() -> datetime:
    """Current UTC time truncated to millisecond precision.

    All stored timestamps carry exactly millisecond resolution so that the
    RFC 3339 wire format round-trips without loss.
    """
    now = datetime.now(timezone.utc)
    return now.replace(microsecond=(now.microsecond // 1000) * 1000)


def rfc3339(ts: datetime) -> str:
    """Render a UTC timestamp as RFC 3339 with millisecond precision."""
    if ts.tzinfo is None:
        ts = ts.replace(tzinfo=timezone.utc)
    ts = ts.astimezone(timezone.utc)
    return ts.strftime("%Y-%m-%dT%H:%M:%S.") + f"{ts.microsecond // 1000:03d}Z"


def parse_rfc3339(text: str) -> datetime:
    ts = datetime.strptime(text, "%Y-%m-%dT%H:%M:%S.%fZ")
    return ts.replace(tzinfo=timezone.utc)


@dataclass(frozen=True)
class User:
    id: str
    email: str
    display_name: str
    role: Role
    is_demo: bool
    is_active: bool
    created_at: datetime


@dataclass(frozen=True)
class Project:
    id: str
    name: str
    is_active: bool
    created_at: datetime


@dataclass(frozen=True)
class SourceFile:
    id: str
    project_id: str
    relative_path: str
    content: str
    required_responses: int
    is_accepting: bool
    created_at: datetime


@dataclass(frozen=True)
class DesignPatternOption:
    id: str
    name: str
    is_listed: bool
    is_active: bool


@dataclass(frozen=True)
class Response:
    id: str
    file_id: str
    user_id: str
    version_seq: int
    pattern_id: str
    pattern_explanation: str
    confidence_level: int
    confidence_explanation: str
    summary: str
    notes: str
    submitted_at: datetime


@dataclass(frozen=True)
class Assignment:
    user_id: str
    file_id: str
    state: AssignmentState
    assigned_at: datetime


def _path_violations(path: str) -> list[str]:
    violations = []
    if not path:
        violations.append("relative_path empty")
        return violations
    if path.startswith("/") or path.startswith("\\"):
        violations.append("relative_path begins with a path separator")
    for segment in path.split("/"):
        if segment in (".", ".."):
            violations.append("path traversal segment")
            break
        if segment == "":
            violations.append("empty path segment")
            break
    return violations


def validate_entity(entity) -> list[str]:
    """Return every violated single-entity invariant; empty list means ok."""
    v: list[str] = []
    if isinstance(entity, User):
        if not entity.email:
            v.append("email empty")
        elif entity.email != entity.email.strip().lower():
            v.append("email not normalized lowercase")
        if not entity.display_name:
            v.append("display_name empty")
        if entity.is_demo and entity.role != Role.CONTRIBUTOR:
            v.append("demo users must have role=contributor")
    elif isinstance(entity, Project):
        if not entity.name:
            v.append("project name empty")
    elif isinstance(entity, SourceFile):
        v.extend(_path_violations(entity.relative_path))
        if entity.required_responses < 1:
            v.append("required_responses below 1")
    elif isinstance(entity, DesignPatternOption):
        if not entity.name or not entity.name.strip():
            v.append("pattern name empty")
    elif isinstance(entity, Response):
        if entity.version_seq < 1:
            v.append("version_seq below 1")
        if not isinstance(entity.confidence_level, int) or not (
            CONFIDENCE_MIN <= entity.confidence_level <= CONFIDENCE_MAX
        ):
            v.append("confidence out of [1,5]")
        if not entity.pattern_explanation:
            v.append("pattern_explanation empty")
        if not entity.confidence_explanation:
            v.append("confidence_explanation empty")
        if not entity.summary:
            v.append("summary empty")
    elif isinstance(entity, Assignment):
        if not isinstance(entity.state, AssignmentState):
            v.append("unknown assignment state")
    else:
        raise TypeError(f"not a domain entity: {type(entity).__name__}")
    return v
