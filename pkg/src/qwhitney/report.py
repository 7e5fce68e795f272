"""Per-check result record shared by the identity catalogue and the triangles."""

from __future__ import annotations

from dataclasses import dataclass

from .modes import Scalar, canonical_text


@dataclass(frozen=True)
class IdentityReport:
    """One identity instance at one parameter point.

    `point` carries the parameter values and the identity-specific indices;
    `passed` means lhs == rhs exactly in exact modes, or within the checker's
    relative tolerance in float mode.
    """

    identity: str
    point: dict
    lhs: Scalar
    rhs: Scalar
    passed: bool

    def as_json_dict(self) -> dict:
        return {
            "id": self.identity,
            "point": self.point,
            "lhs": canonical_text(self.lhs),
            "rhs": canonical_text(self.rhs),
            "pass": self.passed,
        }
