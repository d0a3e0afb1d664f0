"""Project archive ingestion: ZIP extraction with upload-status tracking.

Extraction runs on a background worker so the upload request returns the
job id immediately; state transitions are committed individually and are
observable mid-flight. Concurrent ingests into the same project serialize
on a per-project lock.
"""

from __future__ import annotations

import io
import threading
import zipfile
from concurrent.futures import Future, ThreadPoolExecutor
from dataclasses import dataclass
from datetime import datetime

from sqlalchemy import text
from sqlalchemy.orm import Session, sessionmaker

from . import store
from .db import transact
from .errors import NotFoundError
from .model import JobState, SourceFile, new_id, parse_rfc3339, rfc3339, utcnow

#: Files larger than this are skipped; the in-browser viewer is the consumer.
MAX_FILE_BYTES = 2 * 1024 * 1024


@dataclass(frozen=True)
class UploadJob:
    id: str
    project_id: str
    state: JobState
    files_total: int
    files_registered: int
    entries_skipped: int
    error_detail: str | None
    started_at: datetime
    finished_at: datetime | None


def _job(row) -> UploadJob:
    return UploadJob(
        id=row.id,
        project_id=row.project_id,
        state=JobState(row.state),
        files_total=row.files_total,
        files_registered=row.files_registered,
        entries_skipped=row.entries_skipped,
        error_detail=row.error_detail,
        started_at=parse_rfc3339(row.started_at),
        finished_at=parse_rfc3339(row.finished_at) if row.finished_at else None,
    )


def get_job(session: Session, job_id: str) -> UploadJob:
    row = session.execute(
        text("SELECT * FROM upload_jobs WHERE id = :id"), {"id": job_id}
    ).fetchone()
    if row is None:
        raise NotFoundError(f"upload job {job_id}")
    return _job(row)


def upload_status(session: Session, job_id: str) -> UploadJob:
    """Pure read of the current job state."""
    return get_job(session, job_id)


def set_file_accepting(session: Session, file_id: str, accepting: bool) -> SourceFile:
    """Flip a file in or out of scheduler eligibility; existing data stays."""
    return store.update_file(session, file_id, is_accepting=accepting)


def _strip_shared_root(names: list[str]) -> dict[str, str]:
    """Map entry name -> relative path, dropping one shared root directory."""
    roots = set()
    for name in names:
        if "/" not in name:
            roots.add(None)
        else:
            roots.add(name.split("/", 1)[0])
    if len(roots) == 1 and None not in roots:
        prefix = roots.pop() + "/"
        return {name: name[len(prefix):] for name in names}
    return {name: name for name in names}


def _safe_path(path: str) -> bool:
    if not path or path.startswith("/"):
        return False
    return all(seg not in ("", ".", "..") for seg in path.split("/"))


@dataclass
class _Plan:
    registrable: list[tuple[str, bytes]]
    skipped: int
    notes: list[str]


def _plan_entries(archive: zipfile.ZipFile, session: Session, project_id: str) -> _Plan:
    entries = [info for info in archive.infolist() if not info.is_dir()]
    names = [info.filename.replace("\\", "/") for info in entries]
    relative = _strip_shared_root(names)
    registrable: list[tuple[str, bytes]] = []
    notes: list[str] = []
    skipped = 0
    seen: set[str] = set()
    for info, name in zip(entries, names):
        path = relative[name]
        if not name.lower().endswith(".java"):
            skipped += 1
            continue
        if not _safe_path(path):
            skipped += 1
            notes.append(f"skipped unsafe path: {info.filename}")
            continue
        if info.file_size > MAX_FILE_BYTES:
            skipped += 1
            notes.append(f"skipped oversized file: {path}")
            continue
        if path in seen or store.file_exists(session, project_id, path):
            skipped += 1
            notes.append(f"skipped duplicate path: {path}")
            continue
        seen.add(path)
        registrable.append((path, archive.read(info)))
    return _Plan(registrable=registrable, skipped=skipped, notes=notes)


class IngestWorker:
    """Runs ingestion jobs on a small thread pool."""

    def __init__(self, factory: sessionmaker, max_workers: int = 2):
        self._factory = factory
        self._pool = ThreadPoolExecutor(max_workers=max_workers)
        self._futures: dict[str, Future] = {}
        self._locks_guard = threading.Lock()
        self._project_locks: dict[str, threading.Lock] = {}

    def _project_lock(self, project_id: str) -> threading.Lock:
        with self._locks_guard:
            return self._project_locks.setdefault(project_id, threading.Lock())

    def ingest_project(
        self,
        project_name: str,
        archive: bytes,
        default_required_responses: int | None = None,
    ) -> UploadJob:
        """Register a pending job and return it; extraction is asynchronous."""

        def setup(session: Session):
            project = store.find_project_by_name(session, project_name)
            if project is None:
                project = store.create_project(session, project_name)
            required = default_required_responses
            if required is None:
                required = int(store.get_setting(session, "default_required_responses"))
            job_id = new_id()
            session.execute(
                text(
                    "INSERT INTO upload_jobs (id, project_id, state, files_total,"
                    " files_registered, entries_skipped, started_at)"
                    " VALUES (:id, :p, 'pending', 0, 0, 0, :at)"
                ),
                {"id": job_id, "p": project.id, "at": rfc3339(utcnow())},
            )
            return get_job(session, job_id), project.id, required

        job, project_id, required = transact(self._factory, setup)
        future = self._pool.submit(self._run, job.id, project_id, archive, required)
        self._futures[job.id] = future
        return job

    def wait(self, job_id: str, timeout: float | None = 30.0) -> None:
        """Block until a job's worker finishes (used by tests and the CLI)."""
        future = self._futures.get(job_id)
        if future is not None:
            future.result(timeout=timeout)

    def shutdown(self) -> None:
        self._pool.shutdown(wait=True)

    def _update(self, job_id: str, **fields) -> None:
        sets = ", ".join(f"{k} = :{k}" for k in fields)
        transact(
            self._factory,
            lambda s: s.execute(
                text(f"UPDATE upload_jobs SET {sets} WHERE id = :job_id"),
                {"job_id": job_id, **fields},
            ),
        )

    def _run(self, job_id: str, project_id: str, archive: bytes, required: int) -> None:
        with self._project_lock(project_id):
            self._update(job_id, state=JobState.EXTRACTING.value)
            try:
                self._extract(job_id, project_id, archive, required)
            except (zipfile.BadZipFile, zipfile.LargeZipFile) as exc:
                self._update(
                    job_id,
                    state=JobState.FAILED.value,
                    error_detail=f"malformed archive: {exc}",
                    finished_at=rfc3339(utcnow()),
                )
            except Exception as exc:  # pragma: no cover - defensive
                self._update(
                    job_id,
                    state=JobState.FAILED.value,
                    error_detail=f"ingestion failed: {exc}",
                    finished_at=rfc3339(utcnow()),
                )

    def _extract(self, job_id: str, project_id: str, archive: bytes, required: int) -> None:
        with zipfile.ZipFile(io.BytesIO(archive)) as zf:
            bad = zf.testzip()
            if bad is not None:
                raise zipfile.BadZipFile(f"corrupt member: {bad}")
            plan = transact(
                self._factory, lambda s: _plan_entries(zf, s, project_id)
            )
        self._update(
            job_id,
            files_total=len(plan.registrable),
            entries_skipped=plan.skipped,
        )
        for path, payload in plan.registrable:
            content = payload.decode("utf-8", errors="replace")

            def register(session: Session, path=path, content=content):
                store.add_file(session, project_id, path, content, required)
                session.execute(
                    text(
                        "UPDATE upload_jobs SET files_registered = files_registered + 1"
                        " WHERE id = :id"
                    ),
                    {"id": job_id},
                )

            transact(self._factory, register)
        self._update(
            job_id,
            state=JobState.COMPLETED.value,
            error_detail="; ".join(plan.notes) if plan.notes else None,
            finished_at=rfc3339(utcnow()),
        )
