"""Check results and their text/JSON serialization.

A check passes exactly when it has no residual or the residual renders as
"0".  Reports are deterministic: check order is fixed by the caller and the
JSON layout never depends on runtime state.
"""

from __future__ import annotations

import json
from dataclasses import dataclass


@dataclass(frozen=True)
class Check:
    id: str
    paper_ref: str
    status: str
    residual: str | None
    detail: str

    @property
    def passed(self) -> bool:
        return self.status == "pass"


def residual_check(check_id: str, ref: str, residual, detail: str = "") -> Check:
    """Build a check from anything with ``is_zero`` and ``render()``."""
    ok = residual.is_zero
    return Check(
        id=check_id,
        paper_ref=ref,
        status="pass" if ok else "fail",
        residual=residual.render(),
        detail=detail,
    )


def flag_check(check_id: str, ref: str, ok: bool, detail: str = "",
               residual: str | None = None) -> Check:
    if not ok and residual is None:
        residual = "nonzero"
    return Check(
        id=check_id,
        paper_ref=ref,
        status="pass" if ok else "fail",
        residual=residual,
        detail=detail,
    )


class VerificationReport:
    """Ordered collection of checks with a pass/fail summary."""

    def __init__(self, checks=None):
        self.checks: list[Check] = list(checks) if checks else []

    def add(self, check: Check) -> None:
        self.checks.append(check)

    def extend(self, other: "VerificationReport") -> None:
        self.checks.extend(other.checks)

    @property
    def total(self) -> int:
        return len(self.checks)

    @property
    def passed(self) -> int:
        return sum(1 for c in self.checks if c.passed)

    @property
    def failed(self) -> int:
        return self.total - self.passed

    @property
    def all_passed(self) -> bool:
        return self.failed == 0

    def to_dict(self) -> dict:
        checks = []
        for c in self.checks:
            entry = {"id": c.id, "paper_ref": c.paper_ref, "status": c.status}
            if c.residual is not None:
                entry["residual"] = c.residual
            entry["detail"] = c.detail
            checks.append(entry)
        return {
            "checks": checks,
            "summary": {"total": self.total, "passed": self.passed,
                        "failed": self.failed},
        }

    def render_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    def render_text(self) -> str:
        lines = []
        for c in self.checks:
            tag = "PASS" if c.passed else "FAIL"
            lines.append(f"[{tag}] {c.id} — {c.paper_ref}")
        return "\n".join(lines) + "\n"
