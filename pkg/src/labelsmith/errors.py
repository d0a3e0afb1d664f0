"""Error types shared across the service layers.

The HTTP layer maps each of these onto one status code; everything below it
raises them directly and stays transport-agnostic.
"""

from __future__ import annotations


class LabelsmithError(Exception):
    """Base class for all domain errors."""


class AuthenticationError(LabelsmithError):
    """Missing, expired or unparseable credentials (HTTP 401)."""


class AuthorizationError(LabelsmithError):
    """Authenticated caller lacks the required role or standing (HTTP 403)."""


class NotFoundError(LabelsmithError):
    """Referenced entity does not exist (HTTP 404)."""


class ConflictError(LabelsmithError):
    """Operation clashes with current state, e.g. duplicate email or a
    closed file (HTTP 409)."""


class ValidationFailure(LabelsmithError):
    """Payload violates one or more entity invariants (HTTP 422)."""

    def __init__(self, violations: list[str]):
        super().__init__("; ".join(violations))
        self.violations = list(violations)
