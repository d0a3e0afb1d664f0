"""Session tokens, OAuth code exchange, and demo accounts.

Roles always come from the stored user record; the identity provider only
asserts the email. Demo accounts are throwaway contributors purged, with
their responses, after the configured retention period.
"""

from __future__ import annotations

import secrets
from dataclasses import dataclass
from datetime import datetime, timedelta
from typing import Protocol

import httpx
from sqlalchemy import text
from sqlalchemy.orm import Session

from .. import store
from ..config import OAuthConfig
from ..errors import AuthenticationError, AuthorizationError
from ..model import Role, User, parse_rfc3339, rfc3339, utcnow

TOKEN_TTL = timedelta(hours=24)


@dataclass(frozen=True)
class SessionToken:
    token: str
    user_id: str
    expires_at: datetime
    issued_via: str


class IdentityProvider(Protocol):
    """Resolves an OAuth authorization code to a verified email address."""

    def resolve_email(self, code: str) -> str: ...


class HttpIdentityProvider:
    """Authorization-code exchange against a configured provider."""

    def __init__(self, oauth: OAuthConfig):
        self._oauth = oauth

    def resolve_email(self, code: str) -> str:
        if not self._oauth.token_url or not self._oauth.userinfo_url:
            raise AuthenticationError("oauth provider not configured")
        try:
            token_resp = httpx.post(
                self._oauth.token_url,
                data={
                    "grant_type": "authorization_code",
                    "code": code,
                    "client_id": self._oauth.client_id,
                    "client_secret": self._oauth.client_secret,
                },
                timeout=10.0,
            )
        except httpx.HTTPError as exc:
            raise AuthenticationError(f"identity provider unreachable: {exc}") from exc
        if token_resp.status_code != 200:
            raise AuthenticationError("invalid grant")
        access_token = token_resp.json().get("access_token")
        if not access_token:
            raise AuthenticationError("invalid grant")
        info_resp = httpx.get(
            self._oauth.userinfo_url,
            headers={"Authorization": f"Bearer {access_token}"},
            timeout=10.0,
        )
        if info_resp.status_code != 200 or "email" not in info_resp.json():
            raise AuthenticationError("identity provider returned no email")
        return info_resp.json()["email"]


class StaticIdentityProvider:
    """Fixed code -> email mapping; for tests and closed deployments."""

    def __init__(self, codes: dict[str, str]):
        self._codes = dict(codes)

    def resolve_email(self, code: str) -> str:
        if code not in self._codes:
            raise AuthenticationError("invalid grant")
        return self._codes[code]


def issue_token(session: Session, user_id: str, via: str) -> SessionToken:
    token = SessionToken(
        token=secrets.token_urlsafe(32),
        user_id=user_id,
        expires_at=utcnow() + TOKEN_TTL,
        issued_via=via,
    )
    session.execute(
        text(
            "INSERT INTO session_tokens (token, user_id, expires_at, issued_via)"
            " VALUES (:t, :u, :e, :v)"
        ),
        {
            "t": token.token,
            "u": token.user_id,
            "e": rfc3339(token.expires_at),
            "v": token.issued_via,
        },
    )
    return token


def resolve_token(session: Session, token: str) -> tuple[User, SessionToken]:
    row = session.execute(
        text("SELECT * FROM session_tokens WHERE token = :t"), {"t": token}
    ).fetchone()
    if row is None:
        raise AuthenticationError("unknown token")
    session_token = SessionToken(
        token=row.token,
        user_id=row.user_id,
        expires_at=parse_rfc3339(row.expires_at),
        issued_via=row.issued_via,
    )
    if session_token.expires_at <= utcnow():
        raise AuthenticationError("token expired")
    user = store.get_user(session, session_token.user_id)
    if not user.is_active:
        raise AuthenticationError("account disabled")
    return user, session_token


def authenticate_oauth(
    session: Session, provider: IdentityProvider, code: str
) -> tuple[User, SessionToken]:
    """Exchange a grant for a session; the email must already be enrolled."""
    email = provider.resolve_email(code)
    user = store.find_user_by_email(session, email)
    if user is None:
        raise AuthorizationError("not enrolled")
    return user, issue_token(session, user.id, "oauth")


def authenticate_demo(session: Session, retention_days: int) -> tuple[User, SessionToken]:
    """Create a fresh throwaway contributor and provision its session."""
    purge_expired_demo_users(session, retention_days)
    suffix = secrets.token_hex(4)
    user = store.create_user(
        session,
        email=f"demo-{suffix}@demo.invalid",
        display_name=f"Demo Contributor {suffix}",
        role=Role.CONTRIBUTOR,
        is_demo=True,
    )
    return user, issue_token(session, user.id, "demo")


def purge_expired_demo_users(session: Session, retention_days: int) -> int:
    """Delete demo users past retention along with everything they produced."""
    cutoff = rfc3339(utcnow() - timedelta(days=retention_days))
    rows = session.execute(
        text("SELECT id FROM users WHERE is_demo AND created_at < :cutoff"),
        {"cutoff": cutoff},
    ).fetchall()
    expired = [r.id for r in rows]
    for user_id in expired:
        for table in ("session_tokens", "assignments", "responses"):
            session.execute(
                text(f"DELETE FROM {table} WHERE user_id = :u"), {"u": user_id}
            )
        session.execute(text("DELETE FROM users WHERE id = :u"), {"u": user_id})
    return len(expired)
