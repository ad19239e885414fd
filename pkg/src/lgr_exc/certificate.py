"""Verification certificates: a claim, its parameters, a status and witnesses."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from typing import Any

PASS = "PASS"
FAIL = "FAIL"
NECESSARY = "NECESSARY-CONDITION PASS"
STATUSES = (PASS, FAIL, NECESSARY)


@dataclass
class Certificate:
    claim: str
    parameters: dict[str, Any] = field(default_factory=dict)
    status: str = PASS
    witnesses: list[Any] = field(default_factory=list)
    elapsed_ms: int = 0

    def __post_init__(self) -> None:
        if self.status not in STATUSES:
            raise ValueError(f"unknown status {self.status!r}")
        if self.status == FAIL and not self.witnesses:
            raise ValueError("a failing certificate needs at least one witness")

    @property
    def ok(self) -> bool:
        return self.status != FAIL

    def to_dict(self) -> dict[str, Any]:
        return {
            "claim": self.claim,
            "parameters": self.parameters,
            "status": self.status,
            "witnesses": self.witnesses,
            "elapsed_ms": self.elapsed_ms,
        }

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=indent)


def merge(claim: str, parts: list[Certificate], parameters: dict[str, Any] | None = None) -> Certificate:
    """Combine sub-certificates; FAIL dominates, then NECESSARY-CONDITION PASS."""
    statuses = {c.status for c in parts}
    status = FAIL if FAIL in statuses else NECESSARY if NECESSARY in statuses else PASS
    witnesses = [w for c in parts if c.status == FAIL for w in c.witnesses] if status == FAIL else []
    return Certificate(
        claim=claim,
        parameters=parameters or {},
        status=status,
        witnesses=witnesses,
        elapsed_ms=sum(c.elapsed_ms for c in parts),
    )


class Timer:
    """Context manager measuring wall-clock milliseconds."""

    def __enter__(self) -> "Timer":
        self._start = time.perf_counter()
        self.ms = 0
        return self

    def __exit__(self, *exc: object) -> None:
        self.ms = int((time.perf_counter() - self._start) * 1000)
