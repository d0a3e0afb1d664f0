"""Assignment engine: deficit-prioritized selection of the next file.

Policy: among files a contributor may still label, pick the one with the
smallest positive deficit (required minus distinct responders). Files whose
deficit is zero or negative come after all positive-deficit files, ordered
by fewest responders, so surplus labels spread evenly. Ties break by
project age then path so the schedule is reproducible.

The policy itself is a pure function over candidate records; the DB-backed
operations build the candidate list and delegate to it.
"""

from __future__ import annotations

from dataclasses import dataclass
from datetime import datetime

from sqlalchemy import text
from sqlalchemy.orm import Session

from . import store
from .errors import AuthorizationError, ConflictError
from .model import Assignment, SourceFile


@dataclass(frozen=True)
class FileDeficit:
    file_id: str
    required: int
    received: int

    @property
    def deficit(self) -> int:
        return self.required - self.received


@dataclass(frozen=True)
class Candidate:
    """One schedulable file with everything the policy orders by."""

    file_id: str
    required: int
    received: int
    project_created_at: datetime
    project_name: str
    relative_path: str

    @property
    def deficit(self) -> int:
        return self.required - self.received


def priority_key(c: Candidate):
    """Total order consulted by the scheduler; smaller sorts first."""
    if c.deficit > 0:
        return (0, c.deficit, c.project_created_at, c.project_name, c.relative_path)
    return (1, c.received, c.project_created_at, c.project_name, c.relative_path)


def choose_next(candidates) -> Candidate | None:
    """Pick the highest-priority candidate, or None when none are eligible."""
    return min(candidates, key=priority_key, default=None)


def _eligible_candidates(session: Session) -> list[Candidate]:
    rows = session.execute(
        text(
            "SELECT f.id AS file_id, f.required_responses AS required,"
            "       f.relative_path, p.created_at AS project_created_at,"
            "       p.name AS project_name,"
            "       count(DISTINCT r.user_id) AS received"
            " FROM source_files f"
            " JOIN projects p ON p.id = f.project_id"
            " LEFT JOIN responses r ON r.file_id = f.id"
            " WHERE f.is_accepting AND p.is_active"
            " GROUP BY f.id"
        )
    ).fetchall()
    return [
        Candidate(
            file_id=r.file_id,
            required=r.required,
            received=r.received,
            project_created_at=store._ts(r.project_created_at),
            project_name=r.project_name,
            relative_path=r.relative_path,
        )
        for r in rows
    ]


def deficit_table(session: Session) -> list[FileDeficit]:
    """All schedulable files in exactly the order next_file consults."""
    ordered = sorted(_eligible_candidates(session), key=priority_key)
    return [FileDeficit(c.file_id, c.required, c.received) for c in ordered]


def next_file(session: Session, user_id: str) -> SourceFile | None:
    """Assign (or re-serve) the next file for a contributor.

    Returns None when the corpus is exhausted for this user. Idempotent: an
    existing active assignment is returned unchanged.
    """
    user = store.get_user(session, user_id)
    if not user.is_active:
        raise AuthorizationError("user is not active")

    current = store.active_assignment(session, user_id)
    if current is not None:
        return store.get_file(session, current.file_id)

    already = store.responded_file_ids(session, user_id)
    pick = choose_next(
        c for c in _eligible_candidates(session) if c.file_id not in already
    )
    if pick is None:
        return None
    store.create_assignment(session, user_id, pick.file_id)
    return store.get_file(session, pick.file_id)


def complete_assignment(session: Session, user_id: str, file_id: str) -> Assignment:
    """Mark the user's active assignment for this file completed.

    Invoked atomically with the first response submission; a standalone call
    without an active assignment is a conflict.
    """
    active = store.active_assignment(session, user_id)
    if active is None or active.file_id != file_id:
        raise ConflictError("no active assignment for this file")
    return store.complete_assignment_row(session, user_id, file_id)
