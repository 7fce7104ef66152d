"""Report records shared by the validators."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, Tuple


@dataclass(frozen=True)
class Violation:
    """A single failed check, localized to a vertex, edge or class id."""

    code: str
    subject: str
    reason: str


@dataclass(frozen=True)
class Report:
    violations: Tuple[Violation, ...] = ()
    details: Dict[str, Any] = field(default_factory=dict, compare=False)

    @property
    def passed(self) -> bool:
        return not self.violations

    def codes(self) -> set[str]:
        return {violation.code for violation in self.violations}

    def first(self) -> Violation | None:
        return self.violations[0] if self.violations else None


def sorted_violations(violations: list[Violation]) -> Tuple[Violation, ...]:
    return tuple(sorted(violations, key=lambda item: (item.subject, item.code, item.reason)))
