"""Verification reports shared by all identity checkers."""

from __future__ import annotations

from dataclasses import dataclass, field


class TruncationError(RuntimeError):
    """A computation would need classes beyond the configured K_0 bound."""


@dataclass
class Report:
    name: str
    instances: int = 0
    failures: list[dict] = field(default_factory=list)
    aborted: int = 0
    failure_count: int = 0
    max_failures: int = 20

    @property
    def passed(self) -> bool:
        return not self.failure_count and not self.aborted

    def check(self, ok: bool, **detail) -> bool:
        self.instances += 1
        if not ok:
            self.failure_count += 1
            if len(self.failures) < self.max_failures:
                self.failures.append({k: _jsonable(v) for k, v in detail.items()})
        return ok

    def abort(self) -> None:
        self.aborted += 1

    @property
    def first_failure(self) -> dict | None:
        return self.failures[0] if self.failures else None

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "instances": self.instances,
            "failures": self.failures,
            "failure_count": self.failure_count,
            "aborted": self.aborted,
        }

    def __str__(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{self.name}: {status} ({self.instances} instances, {self.failure_count} failures, {self.aborted} aborted)"


def _jsonable(v):
    if isinstance(v, (str, int, float, bool)) or v is None:
        return v
    if hasattr(v, "to_json"):
        return v.to_json()
    if hasattr(v, "label"):
        return v.label()
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, dict):
        return {str(_jsonable(k)): _jsonable(x) for k, x in v.items()}
    return str(v)
