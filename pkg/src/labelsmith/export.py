"""Response querying, CSV export, and confidence-weighted aggregation.

The export schema is fixed and versioned: columns are appended only, never
reordered, so downstream training pipelines can rely on positions. Weights
are the raw 1-5 confidence values; consumers wanting a different weighting
re-derive it from the exported confidences.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from sqlalchemy import text
from sqlalchemy.orm import Session

from .errors import AuthorizationError, NotFoundError, ValidationFailure
from .model import Role, User, parse_rfc3339, rfc3339

EXPORT_COLUMNS = (
    "project",
    "file_path",
    "contributor_email",
    "pattern",
    "pattern_explanation",
    "confidence_level",
    "confidence_explanation",
    "summary",
    "notes",
    "version_seq",
    "submitted_at",
)

_SORT_DIRECTIONS = ("asc", "desc")


@dataclass(frozen=True)
class ResponseQuery:
    """Filter/sort/search criteria over the latest-response table."""

    global_search: str | None = None
    column_filters: Mapping[str, str] = field(default_factory=dict)
    sort_keys: tuple[tuple[str, str], ...] = ()
    scope: str = "self"


@dataclass(frozen=True)
class AggregateLabel:
    file_id: str
    weights: dict[str, int]
    consensus: str
    agreement: float
    responder_count: int


def render_cell(column: str, value) -> str:
    """Canonical string form of a cell, used for CSV and for matching."""
    if column == "submitted_at":
        return rfc3339(value)
    return str(value)


def _validate_query(query: ResponseQuery) -> None:
    problems = []
    for column in query.column_filters:
        if column not in EXPORT_COLUMNS:
            problems.append(f"unknown column: {column}")
    for column, direction in query.sort_keys:
        if column not in EXPORT_COLUMNS:
            problems.append(f"unknown column: {column}")
        if direction not in _SORT_DIRECTIONS:
            problems.append(f"unknown sort direction: {direction}")
    if query.scope not in ("self", "all"):
        problems.append(f"unknown scope: {query.scope}")
    if problems:
        raise ValidationFailure(problems)


def fetch_latest_rows(session: Session, user_id: str | None = None) -> list[dict]:
    """Latest response per (file, contributor), joined for the export schema.

    Row dicts carry the export columns plus ``file_id``/``user_id`` for
    navigation; those two never appear in the CSV.
    """
    scope_clause = "WHERE r.user_id = :u" if user_id is not None else ""
    rows = session.execute(
        text(
            "SELECT r.file_id, r.user_id, r.version_seq, r.pattern_explanation,"
            "       r.confidence_level, r.confidence_explanation, r.summary,"
            "       r.notes, r.submitted_at, f.relative_path, p.name AS project_name,"
            "       u.email, o.name AS pattern_name"
            " FROM responses r"
            " JOIN (SELECT file_id, user_id, max(version_seq) AS seq FROM responses"
            "       GROUP BY file_id, user_id) m"
            "   ON r.file_id = m.file_id AND r.user_id = m.user_id AND r.version_seq = m.seq"
            " JOIN source_files f ON f.id = r.file_id"
            " JOIN projects p ON p.id = f.project_id"
            " JOIN users u ON u.id = r.user_id"
            " JOIN pattern_options o ON o.id = r.pattern_id"
            f" {scope_clause}"
        ),
        {"u": user_id} if user_id is not None else {},
    ).fetchall()
    return [
        {
            "file_id": r.file_id,
            "user_id": r.user_id,
            "project": r.project_name,
            "file_path": r.relative_path,
            "contributor_email": r.email,
            "pattern": r.pattern_name,
            "pattern_explanation": r.pattern_explanation,
            "confidence_level": r.confidence_level,
            "confidence_explanation": r.confidence_explanation,
            "summary": r.summary,
            "notes": r.notes,
            "version_seq": r.version_seq,
            "submitted_at": parse_rfc3339(r.submitted_at),
        }
        for r in rows
    ]


def apply_query(rows: list[dict], query: ResponseQuery) -> list[dict]:
    """Pure filter/search/sort pipeline over already-fetched rows."""
    _validate_query(query)
    kept = rows
    for column, needle in query.column_filters.items():
        lowered = needle.lower()
        kept = [r for r in kept if lowered in render_cell(column, r[column]).lower()]
    if query.global_search:
        lowered = query.global_search.lower()
        kept = [
            r
            for r in kept
            if any(lowered in render_cell(c, r[c]).lower() for c in EXPORT_COLUMNS)
        ]
    # Deterministic base order: newest first, ties broken textually.
    kept = sorted(
        kept,
        key=lambda r: (r["project"], r["file_path"], r["contributor_email"]),
    )
    kept.sort(key=lambda r: r["submitted_at"], reverse=True)
    for column, direction in reversed(query.sort_keys):
        kept.sort(key=lambda r: r[column], reverse=(direction == "desc"))
    return kept


def query_responses(session: Session, query: ResponseQuery, caller: User) -> list[dict]:
    """Latest responses matching the query, in query order."""
    _validate_query(query)
    if query.scope == "all":
        if caller.role != Role.ADMIN:
            raise AuthorizationError("viewing all responses is admin-only")
        rows = fetch_latest_rows(session)
    else:
        rows = fetch_latest_rows(session, user_id=caller.id)
    return apply_query(rows, query)


def csv_field(value: str) -> str:
    """RFC 4180 field: quote when needed, double any embedded quotes."""
    if any(ch in value for ch in ',"\r\n'):
        return '"' + value.replace('"', '""') + '"'
    return value


def rows_to_csv(rows: list[dict]) -> bytes:
    """Serialize rows to RFC 4180 CSV: UTF-8, CRLF terminators, header row."""
    lines = [",".join(EXPORT_COLUMNS)]
    for row in rows:
        lines.append(
            ",".join(csv_field(render_cell(c, row[c])) for c in EXPORT_COLUMNS)
        )
    return ("\r\n".join(lines) + "\r\n").encode("utf-8")


def export_csv(session: Session, query: ResponseQuery, caller: User) -> bytes:
    return rows_to_csv(query_responses(session, query, caller))


def weigh_responses(pairs: list[tuple[str, int]]) -> AggregateLabel | None:
    """Aggregate (pattern_name, confidence) pairs for one file.

    Consensus is the pattern with the greatest confidence-weight sum; ties
    break by pattern name ascending. Returns None for an empty list.
    """
    if not pairs:
        return None
    weights: dict[str, int] = {}
    for name, confidence in pairs:
        weights[name] = weights.get(name, 0) + confidence
    consensus = min(weights.items(), key=lambda kv: (-kv[1], kv[0]))[0]
    total = sum(weights.values())
    return AggregateLabel(
        file_id="",
        weights=weights,
        consensus=consensus,
        agreement=weights[consensus] / total,
        responder_count=len(pairs),
    )


def _file_pairs(session: Session, file_id: str) -> list[tuple[str, int]]:
    rows = session.execute(
        text(
            "SELECT o.name, r.confidence_level"
            " FROM responses r"
            " JOIN (SELECT user_id, max(version_seq) AS seq FROM responses"
            "       WHERE file_id = :f GROUP BY user_id) m"
            "   ON r.user_id = m.user_id AND r.version_seq = m.seq"
            " JOIN pattern_options o ON o.id = r.pattern_id"
            " WHERE r.file_id = :f"
        ),
        {"f": file_id},
    ).fetchall()
    return [(r[0], r[1]) for r in rows]


def aggregate_file(session: Session, file_id: str) -> AggregateLabel:
    """Confidence-weighted consensus for one file's latest responses."""
    label = weigh_responses(_file_pairs(session, file_id))
    if label is None:
        raise NotFoundError("no responses yet")
    return AggregateLabel(
        file_id=file_id,
        weights=label.weights,
        consensus=label.consensus,
        agreement=label.agreement,
        responder_count=label.responder_count,
    )


def agreement_report(session: Session) -> tuple[list[AggregateLabel], float | None]:
    """Per-file aggregates over every labelled file plus the corpus mean.

    Files are ordered by (project name, path); the mean is absent for an
    unlabelled corpus.
    """
    file_rows = session.execute(
        text(
            "SELECT DISTINCT f.id, p.name AS project_name, f.relative_path"
            " FROM responses r"
            " JOIN source_files f ON f.id = r.file_id"
            " JOIN projects p ON p.id = f.project_id"
            " ORDER BY project_name, f.relative_path"
        )
    ).fetchall()
    labels = [aggregate_file(session, row.id) for row in file_rows]
    if not labels:
        return [], None
    mean = sum(l.agreement for l in labels) / len(labels)
    return labels, mean
