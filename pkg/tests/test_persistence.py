from __future__ import annotations

import threading

import pytest
from sqlalchemy import text

from labelsmith import db, store
from labelsmith.db import (
    current_schema_version,
    make_engine,
    migrate,
    read_session,
    session_factory,
    transact,
)
from labelsmith.errors import ConflictError
from labelsmith.model import Response, new_id, utcnow
from labelsmith.responses import ResponsePayload, submit_response

from support import seed_corpus, seed_user


def payload(confidence=3):
    return ResponsePayload(
        pattern_name="None",
        pattern_explanation="no structural pattern present",
        confidence_level=confidence,
        confidence_explanation="straightforward data holder",
        summary="plain value class",
    )


class TestMigrations:
    def test_fresh_database_applies_all(self, tmp_path):
        engine = make_engine(f"sqlite:///{tmp_path}/fresh.db")
        applied = migrate(engine)
        assert len(applied) == len(db.MIGRATIONS)
        assert current_schema_version(engine) == db.SCHEMA_VERSION

    def test_rerun_applies_nothing(self, engine):
        assert migrate(engine) == []

    def test_backward_target_rejected(self, engine):
        with pytest.raises(ConflictError):
            migrate(engine, target=0)

    def test_failing_step_is_named(self, tmp_path, monkeypatch):
        broken = db.MIGRATIONS + [(99, "broken step", ["CREATE BOGUS"])]
        monkeypatch.setattr(db, "MIGRATIONS", broken)
        engine = make_engine(f"sqlite:///{tmp_path}/broken.db")
        with pytest.raises(RuntimeError, match="broken step"):
            migrate(engine, target=99)
        # the failed migration left no version bump behind
        assert current_schema_version(engine) < 99

    def test_seeded_none_pattern(self, session):
        assert store.find_pattern_by_name(session, "None") is not None


class TestTransact:
    def test_failing_work_leaves_no_writes(self, factory):
        def work(session):
            seed_user(session, "ghost@example.org")
            raise RuntimeError("boom")

        with pytest.raises(RuntimeError):
            transact(factory, work)
        with read_session(factory) as session:
            assert store.find_user_by_email(session, "ghost@example.org") is None

    def test_commit_failure_leaves_no_partial_state(self, factory):
        """Fault injection at the commit boundary: no chain gaps, no
        completed assignment without its version-1 response."""
        user, source = transact(
            factory,
            lambda s: (
                seed_user(s, "u@example.org"),
                seed_corpus(s, "p", {"a.java": "class A {}"})[1]["a.java"],
            ),
        )
        from labelsmith import scheduler

        transact(factory, lambda s: scheduler.next_file(s, user.id))

        class Exploding(Exception):
            pass

        def work(session):
            submit_response(session, user.id, source.id, payload())
            original = session.commit
            session.commit = lambda: (_ for _ in ()).throw(Exploding())
            return original

        with pytest.raises(Exploding):
            transact(factory, work)

        with read_session(factory) as session:
            assert store.response_chain(session, source.id, user.id) == []
            active = store.active_assignment(session, user.id)
            assert active is not None and active.file_id == source.id

    def test_read_only_work_holds_no_locks(self, factory):
        with read_session(factory) as session:
            session.execute(text("SELECT count(*) FROM users")).fetchone()
        # a writer can proceed immediately afterwards
        transact(factory, lambda s: seed_user(s, "after@example.org"))

    def test_concurrent_version_allocation_is_gapless(self, factory):
        user, source = transact(
            factory,
            lambda s: (
                seed_user(s, "c@example.org"),
                seed_corpus(s, "p", {"x.java": "class X {}"})[1]["x.java"],
            ),
        )
        errors = []

        def submit_many(count):
            for _ in range(count):
                try:
                    transact(
                        factory,
                        lambda s: submit_response(s, user.id, source.id, payload()),
                    )
                except Exception as exc:  # pragma: no cover
                    errors.append(exc)

        threads = [threading.Thread(target=submit_many, args=(10,)) for _ in range(4)]
        for t in threads:
            t.start()
        for t in threads:
            t.join()

        assert errors == []
        with read_session(factory) as session:
            chain = store.response_chain(session, source.id, user.id)
            assert [r.version_seq for r in chain] == list(range(1, 41))

    def test_serialization_conflict_surfaces_as_conflict(self, factory, monkeypatch):
        from sqlalchemy.exc import OperationalError

        def always_locked(session):
            raise OperationalError("stmt", {}, Exception("database is locked"))

        monkeypatch.setattr(db, "TRANSACT_ATTEMPTS", 2)
        with pytest.raises(ConflictError):
            transact(factory, always_locked, attempts=2)


class TestAppendOnlyAtRest:
    def test_version_uniqueness_enforced_by_schema(self, factory):
        user, source = transact(
            factory,
            lambda s: (
                seed_user(s, "u2@example.org"),
                seed_corpus(s, "p2", {"y.java": "class Y {}"})[1]["y.java"],
            ),
        )

        def duplicate_version(session):
            pattern = store.find_pattern_by_name(session, "None")
            for _ in range(2):
                store.insert_response(
                    session,
                    Response(
                        id=new_id(),
                        file_id=source.id,
                        user_id=user.id,
                        version_seq=1,
                        pattern_id=pattern.id,
                        pattern_explanation="x",
                        confidence_level=3,
                        confidence_explanation="y",
                        summary="z",
                        notes="",
                        submitted_at=utcnow(),
                    ),
                )

        with pytest.raises(Exception):
            transact(factory, duplicate_version)
