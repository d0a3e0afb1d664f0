"""Request bodies for the HTTP surface.

Field-level typing only; invariant checks live in the domain layer so the
violation messages are uniform across entry points.
"""

from __future__ import annotations

from pydantic import BaseModel

from ..model import Role


class OAuthCallbackBody(BaseModel):
    code: str


class SubmitResponseBody(BaseModel):
    pattern_name: str
    pattern_explanation: str
    confidence_level: int
    confidence_explanation: str
    summary: str
    notes: str = ""


class CreateUserBody(BaseModel):
    email: str
    display_name: str
    role: Role = Role.CONTRIBUTOR


class PatchUserBody(BaseModel):
    display_name: str | None = None
    role: Role | None = None
    is_active: bool | None = None


class CreatePatternBody(BaseModel):
    name: str
    is_listed: bool = True


class PatchPatternBody(BaseModel):
    name: str | None = None
    is_listed: bool | None = None
    is_active: bool | None = None


class PatchFileBody(BaseModel):
    is_accepting: bool | None = None
    required_responses: int | None = None


class PatchSettingsBody(BaseModel):
    default_required_responses: int | None = None
    demo_mode: bool | None = None
    demo_retention_days: int | None = None
