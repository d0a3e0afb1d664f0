"""Append-only response chains: submission, latest view, admin history."""

from __future__ import annotations

from dataclasses import dataclass

from sqlalchemy.orm import Session

from . import store
from .errors import AuthorizationError, ConflictError, ValidationFailure
from .model import Response, Role, User, new_id, utcnow


@dataclass(frozen=True)
class ResponsePayload:
    """Contributor-supplied response fields; everything else is server-set.

    ``pattern_name`` may name a curated option, the reserved "None", or an
    unlisted pattern typed in by the contributor (matched case-insensitively,
    created on first use).
    """

    pattern_name: str
    pattern_explanation: str
    confidence_level: int
    confidence_explanation: str
    summary: str
    notes: str = ""


def submit_response(
    session: Session, user_id: str, file_id: str, payload: ResponsePayload
) -> Response:
    """Append the next version of this contributor's response to a file.

    The first version also completes the user's active assignment for the
    file, in the same transaction. New first-time responses are rejected on
    deactivated files; updates to an existing chain stay allowed.
    """
    user = store.get_user(session, user_id)
    if not user.is_active:
        raise AuthorizationError("user is not active")
    source = store.get_file(session, file_id)

    prior_versions = store.chain_length(session, file_id, user_id)
    if not source.is_accepting and prior_versions == 0:
        raise ConflictError("file closed")

    if not payload.pattern_name or not payload.pattern_name.strip():
        raise ValidationFailure(["pattern name empty"])
    pattern = store.ensure_pattern(session, payload.pattern_name)

    response = Response(
        id=new_id(),
        file_id=file_id,
        user_id=user_id,
        version_seq=prior_versions + 1,
        pattern_id=pattern.id,
        pattern_explanation=payload.pattern_explanation,
        confidence_level=payload.confidence_level,
        confidence_explanation=payload.confidence_explanation,
        summary=payload.summary,
        notes=payload.notes,
        submitted_at=utcnow(),
    )
    store.insert_response(session, response)

    if response.version_seq == 1:
        active = store.active_assignment(session, user_id)
        if active is not None and active.file_id == file_id:
            store.complete_assignment_row(session, user_id, file_id)
    return response


def latest_responses(session: Session, user_id: str) -> list[Response]:
    """The max-version response per file this user has labelled."""
    user = store.get_user(session, user_id)
    if not user.is_active:
        raise AuthorizationError("user is not active")
    return store.latest_responses_for_user(session, user_id)


def response_history(
    session: Session, file_id: str, user_id: str, caller: User
) -> list[Response]:
    """Full version chain, ascending; administrators only."""
    if caller.role != Role.ADMIN:
        raise AuthorizationError("history is admin-only")
    return store.response_chain(session, file_id, user_id)
