"""HTTP routes: bearer-authenticated JSON API plus CSV and multipart.

Three routers: auth (no token required), contributor surface, and the
admin surface. Role checks hang off router-level dependencies so they run
before any body validation.
"""

from __future__ import annotations

from fastapi import APIRouter, Depends, File, Form, Header, Query, Request, UploadFile
from fastapi.responses import Response as RawResponse
from sqlalchemy.orm import sessionmaker

from .. import export, ingest, responses, scheduler, store
from ..db import read_session, transact
from ..errors import (
    AuthenticationError,
    AuthorizationError,
    NotFoundError,
    ValidationFailure,
)
from ..highlight import token_json, tokenize
from ..model import Response, Role, SourceFile, User, rfc3339, utcnow
from . import auth as auth_mod
from .schemas import (
    CreatePatternBody,
    CreateUserBody,
    OAuthCallbackBody,
    PatchFileBody,
    PatchPatternBody,
    PatchSettingsBody,
    PatchUserBody,
    SubmitResponseBody,
)


def _factory(request: Request) -> sessionmaker:
    return request.app.state.factory


def current_user(
    request: Request, authorization: str | None = Header(default=None)
) -> User:
    if not authorization or not authorization.startswith("Bearer "):
        raise AuthenticationError("missing bearer token")
    token = authorization[len("Bearer ") :]
    with read_session(_factory(request)) as session:
        user, _ = auth_mod.resolve_token(session, token)
    return user


def admin_user(user: User = Depends(current_user)) -> User:
    if user.role != Role.ADMIN:
        raise AuthorizationError("admin role required")
    return user


# -- serializers -------------------------------------------------------

def user_json(u: User) -> dict:
    return {
        "id": u.id,
        "email": u.email,
        "display_name": u.display_name,
        "role": u.role.value,
        "is_demo": u.is_demo,
        "is_active": u.is_active,
        "created_at": rfc3339(u.created_at),
    }


def file_json(f: SourceFile) -> dict:
    return {
        "id": f.id,
        "project_id": f.project_id,
        "relative_path": f.relative_path,
        "required_responses": f.required_responses,
        "is_accepting": f.is_accepting,
        "created_at": rfc3339(f.created_at),
    }


def response_json(r: Response, pattern_name: str) -> dict:
    return {
        "id": r.id,
        "file_id": r.file_id,
        "user_id": r.user_id,
        "version_seq": r.version_seq,
        "pattern_name": pattern_name,
        "pattern_explanation": r.pattern_explanation,
        "confidence_level": r.confidence_level,
        "confidence_explanation": r.confidence_explanation,
        "summary": r.summary,
        "notes": r.notes,
        "submitted_at": rfc3339(r.submitted_at),
    }


def job_json(job: ingest.UploadJob) -> dict:
    return {
        "id": job.id,
        "project_id": job.project_id,
        "state": job.state.value,
        "files_total": job.files_total,
        "files_registered": job.files_registered,
        "entries_skipped": job.entries_skipped,
        "error_detail": job.error_detail,
        "started_at": rfc3339(job.started_at),
        "finished_at": rfc3339(job.finished_at) if job.finished_at else None,
    }


def row_json(row: dict) -> dict:
    rendered = {c: export.render_cell(c, row[c]) for c in export.EXPORT_COLUMNS}
    rendered["confidence_level"] = row["confidence_level"]
    rendered["version_seq"] = row["version_seq"]
    rendered["file_id"] = row["file_id"]
    rendered["user_id"] = row["user_id"]
    return rendered


def _parse_query(
    q: str | None, filters: list[str], sorts: list[str], scope: str
) -> export.ResponseQuery:
    column_filters: dict[str, str] = {}
    for item in filters:
        column, sep, needle = item.partition(":")
        if not sep:
            raise ValidationFailure([f"bad filter syntax (want column:text): {item}"])
        column_filters[column] = needle
    sort_keys = []
    for item in sorts:
        column, _, direction = item.partition(":")
        sort_keys.append((column, direction or "asc"))
    return export.ResponseQuery(
        global_search=q or None,
        column_filters=column_filters,
        sort_keys=tuple(sort_keys),
        scope=scope,
    )


def _csv_response(payload: bytes) -> RawResponse:
    stamp = utcnow().strftime("%Y%m%dT%H%M%S") + "Z"
    return RawResponse(
        content=payload,
        media_type="text/csv; charset=utf-8",
        headers={
            "Content-Disposition": f'attachment; filename="responses-{stamp}.csv"'
        },
    )


# -- auth router -------------------------------------------------------

auth_router = APIRouter()


@auth_router.post("/auth/oauth/callback")
def oauth_callback(request: Request, body: OAuthCallbackBody):
    provider: auth_mod.IdentityProvider = request.app.state.identity_provider
    email = provider.resolve_email(body.code)

    def work(session):
        user = store.find_user_by_email(session, email)
        if user is None:
            raise AuthorizationError("not enrolled")
        return user, auth_mod.issue_token(session, user.id, "oauth")

    user, token = transact(_factory(request), work)
    return {
        "token": token.token,
        "expires_at": rfc3339(token.expires_at),
        "user": user_json(user),
    }


@auth_router.post("/auth/demo")
def demo_login(request: Request):
    def work(session):
        settings = store.all_settings(session)
        if settings["demo_mode"].lower() != "true":
            raise NotFoundError("demo mode is not enabled")
        return auth_mod.authenticate_demo(
            session, int(settings["demo_retention_days"])
        )

    user, token = transact(_factory(request), work)
    return {
        "token": token.token,
        "expires_at": rfc3339(token.expires_at),
        "user": user_json(user),
    }


# -- contributor router ------------------------------------------------

api_router = APIRouter(dependencies=[Depends(current_user)])


@api_router.get("/me")
def me(user: User = Depends(current_user)):
    return user_json(user)


@api_router.get("/next-file")
def next_file(request: Request, user: User = Depends(current_user)):
    source = transact(_factory(request), lambda s: scheduler.next_file(s, user.id))
    if source is None:
        return {"exhausted": True, "file": None}
    return {"exhausted": False, "file": file_json(source)}


@api_router.get("/patterns")
def list_pattern_options(request: Request):
    """Active pattern options for the response form's selector."""
    with read_session(_factory(request)) as session:
        patterns = store.list_patterns(session)
    return {
        "patterns": [
            {"id": p.id, "name": p.name, "is_listed": p.is_listed} for p in patterns
        ]
    }


@api_router.get("/projects")
def list_projects(
    request: Request,
    limit: int = Query(default=100, ge=1, le=1000),
    offset: int = Query(default=0, ge=0),
):
    with read_session(_factory(request)) as session:
        projects = store.list_projects(session, limit=limit, offset=offset)
        return {
            "projects": [
                {
                    "id": p.id,
                    "name": p.name,
                    "is_active": p.is_active,
                    "created_at": rfc3339(p.created_at),
                }
                for p in projects
            ]
        }


@api_router.get("/projects/{project_id}/files")
def list_project_files(
    request: Request,
    project_id: str,
    limit: int = Query(default=100, ge=1, le=1000),
    offset: int = Query(default=0, ge=0),
):
    with read_session(_factory(request)) as session:
        store.get_project(session, project_id)
        files = store.list_files(session, project_id, limit=limit, offset=offset)
        return {"files": [file_json(f) for f in files]}


@api_router.get("/files/{file_id}")
def get_file(request: Request, file_id: str):
    with read_session(_factory(request)) as session:
        source = store.get_file(session, file_id)
        project = store.get_project(session, source.project_id)
    payload = file_json(source)
    payload["project_name"] = project.name
    payload["content"] = source.content
    payload["tokens"] = token_json(tokenize(source.content))
    return payload


@api_router.post("/files/{file_id}/responses", status_code=201)
def submit_response(
    request: Request,
    file_id: str,
    body: SubmitResponseBody,
    user: User = Depends(current_user),
):
    payload = responses.ResponsePayload(
        pattern_name=body.pattern_name,
        pattern_explanation=body.pattern_explanation,
        confidence_level=body.confidence_level,
        confidence_explanation=body.confidence_explanation,
        summary=body.summary,
        notes=body.notes,
    )

    def work(session):
        stored = responses.submit_response(session, user.id, file_id, payload)
        pattern = store.get_pattern(session, stored.pattern_id)
        return response_json(stored, pattern.name)

    return transact(_factory(request), work)


@api_router.get("/my-responses")
def my_responses(
    request: Request,
    q: str | None = None,
    filter: list[str] = Query(default=[]),
    sort: list[str] = Query(default=[]),
    limit: int = Query(default=100, ge=1, le=1000),
    offset: int = Query(default=0, ge=0),
    user: User = Depends(current_user),
):
    query = _parse_query(q, filter, sort, scope="self")
    with read_session(_factory(request)) as session:
        rows = export.query_responses(session, query, user)
    return {
        "total": len(rows),
        "rows": [row_json(r) for r in rows[offset : offset + limit]],
    }


@api_router.get("/my-responses/export.csv")
def my_responses_csv(
    request: Request,
    q: str | None = None,
    filter: list[str] = Query(default=[]),
    sort: list[str] = Query(default=[]),
    user: User = Depends(current_user),
):
    query = _parse_query(q, filter, sort, scope="self")
    with read_session(_factory(request)) as session:
        payload = export.export_csv(session, query, user)
    return _csv_response(payload)


# -- admin router ------------------------------------------------------

admin_router = APIRouter(prefix="/admin", dependencies=[Depends(admin_user)])


@admin_router.get("/users")
def admin_list_users(
    request: Request,
    limit: int = Query(default=100, ge=1, le=1000),
    offset: int = Query(default=0, ge=0),
):
    with read_session(_factory(request)) as session:
        users = store.list_users(session, limit=limit, offset=offset)
    return {"users": [user_json(u) for u in users]}


@admin_router.post("/users", status_code=201)
def admin_create_user(request: Request, body: CreateUserBody):
    user = transact(
        _factory(request),
        lambda s: store.create_user(s, body.email, body.display_name, body.role),
    )
    return user_json(user)


@admin_router.patch("/users/{user_id}")
def admin_patch_user(request: Request, user_id: str, body: PatchUserBody):
    changes = body.model_dump(exclude_none=True)
    user = transact(_factory(request), lambda s: store.update_user(s, user_id, **changes))
    return user_json(user)


@admin_router.get("/patterns")
def admin_list_patterns(request: Request, include_inactive: bool = False):
    with read_session(_factory(request)) as session:
        patterns = store.list_patterns(session, include_inactive=include_inactive)
    return {
        "patterns": [
            {
                "id": p.id,
                "name": p.name,
                "is_listed": p.is_listed,
                "is_active": p.is_active,
            }
            for p in patterns
        ]
    }


@admin_router.post("/patterns", status_code=201)
def admin_create_pattern(request: Request, body: CreatePatternBody):
    pattern = transact(
        _factory(request), lambda s: store.create_pattern(s, body.name, body.is_listed)
    )
    return {
        "id": pattern.id,
        "name": pattern.name,
        "is_listed": pattern.is_listed,
        "is_active": pattern.is_active,
    }


@admin_router.patch("/patterns/{pattern_id}")
def admin_patch_pattern(request: Request, pattern_id: str, body: PatchPatternBody):
    changes = body.model_dump(exclude_none=True)
    pattern = transact(
        _factory(request), lambda s: store.update_pattern(s, pattern_id, **changes)
    )
    return {
        "id": pattern.id,
        "name": pattern.name,
        "is_listed": pattern.is_listed,
        "is_active": pattern.is_active,
    }


@admin_router.post("/projects", status_code=202)
def admin_upload_project(
    request: Request,
    name: str = Form(...),
    file: UploadFile = File(...),
    default_required_responses: int | None = Form(default=None),
):
    worker: ingest.IngestWorker = request.app.state.ingest_worker
    archive = file.file.read()
    job = worker.ingest_project(name, archive, default_required_responses)
    return job_json(job)


@admin_router.get("/uploads/{job_id}")
def admin_upload_status(request: Request, job_id: str):
    with read_session(_factory(request)) as session:
        job = ingest.upload_status(session, job_id)
    return job_json(job)


@admin_router.patch("/files/{file_id}")
def admin_patch_file(request: Request, file_id: str, body: PatchFileBody):
    def work(session):
        return store.update_file(
            session,
            file_id,
            is_accepting=body.is_accepting,
            required_responses=body.required_responses,
        )

    return file_json(transact(_factory(request), work))


@admin_router.get("/responses")
def admin_responses(
    request: Request,
    q: str | None = None,
    filter: list[str] = Query(default=[]),
    sort: list[str] = Query(default=[]),
    limit: int = Query(default=100, ge=1, le=1000),
    offset: int = Query(default=0, ge=0),
    user: User = Depends(admin_user),
):
    query = _parse_query(q, filter, sort, scope="all")
    with read_session(_factory(request)) as session:
        rows = export.query_responses(session, query, user)
    return {
        "total": len(rows),
        "rows": [row_json(r) for r in rows[offset : offset + limit]],
    }


@admin_router.get("/responses/export.csv")
def admin_responses_csv(
    request: Request,
    q: str | None = None,
    filter: list[str] = Query(default=[]),
    sort: list[str] = Query(default=[]),
    user: User = Depends(admin_user),
):
    query = _parse_query(q, filter, sort, scope="all")
    with read_session(_factory(request)) as session:
        payload = export.export_csv(session, query, user)
    return _csv_response(payload)


@admin_router.get("/responses/{file_id}/{user_id}/history")
def admin_response_history(
    request: Request,
    file_id: str,
    user_id: str,
    caller: User = Depends(admin_user),
):
    with read_session(_factory(request)) as session:
        chain = responses.response_history(session, file_id, user_id, caller)
        names = {p.id: p.name for p in store.list_patterns(session, include_inactive=True)}
    return {"versions": [response_json(r, names[r.pattern_id]) for r in chain]}


@admin_router.get("/aggregates")
def admin_aggregates(request: Request):
    with read_session(_factory(request)) as session:
        labels, mean = export.agreement_report(session)
        files = {f.id: f for p in store.list_projects(session, limit=1000)
                 for f in store.list_files(session, p.id, limit=1000)}
        projects = {p.id: p.name for p in store.list_projects(session, limit=1000)}
    entries = []
    for label in labels:
        source = files.get(label.file_id)
        entries.append(
            {
                "file_id": label.file_id,
                "project": projects.get(source.project_id) if source else None,
                "file_path": source.relative_path if source else None,
                "weights": label.weights,
                "consensus": label.consensus,
                "agreement": label.agreement,
                "responder_count": label.responder_count,
            }
        )
    return {"files": entries, "mean_agreement": mean}


@admin_router.get("/settings")
def admin_get_settings(request: Request):
    with read_session(_factory(request)) as session:
        settings = store.all_settings(session)
    return {
        "default_required_responses": int(settings["default_required_responses"]),
        "demo_mode": settings["demo_mode"].lower() == "true",
        "demo_retention_days": int(settings["demo_retention_days"]),
    }


@admin_router.patch("/settings")
def admin_patch_settings(request: Request, body: PatchSettingsBody):
    def work(session):
        if body.default_required_responses is not None:
            if body.default_required_responses < 1:
                raise ValidationFailure(["default_required_responses below 1"])
            store.set_setting(
                session,
                "default_required_responses",
                str(body.default_required_responses),
            )
        if body.demo_mode is not None:
            store.set_setting(session, "demo_mode", "true" if body.demo_mode else "false")
        if body.demo_retention_days is not None:
            if body.demo_retention_days < 0:
                raise ValidationFailure(["demo_retention_days below 0"])
            store.set_setting(
                session, "demo_retention_days", str(body.demo_retention_days)
            )
        return store.all_settings(session)

    settings = transact(_factory(request), work)
    return {
        "default_required_responses": int(settings["default_required_responses"]),
        "demo_mode": settings["demo_mode"].lower() == "true",
        "demo_retention_days": int(settings["demo_retention_days"]),
    }
