"""Exception hierarchy. Every error carries a machine-readable code and the offending field."""

from __future__ import annotations


class GFTError(ValueError):
    code = "invalid"

    def __init__(self, message: str, field: str | None = None):
        super().__init__(message)
        self.message = message
        self.field = field

    def to_dict(self) -> dict:
        return {"code": self.code, "message": self.message, "field": self.field}


class DomainError(GFTError):
    code = "domain"


class GapMismatchError(GFTError):
    code = "gap_mismatch"


class NonMemberError(GFTError):
    code = "non_member"


class QuadratureError(RuntimeError):
    """Singular-integral estimate failed to converge."""
