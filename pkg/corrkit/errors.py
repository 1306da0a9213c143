"""Exception hierarchy and validation reports shared by every corrkit module."""
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional


@dataclass(frozen=True)
class Issue:
    kind: str
    where: str
    detail: Dict[str, Any] = field(default_factory=dict, hash=False, compare=False)

    def __str__(self):
        extra = ", ".join(f"{k}={v}" for k, v in sorted(self.detail.items()))
        return f"[{self.kind}] at {self.where}" + (f": {extra}" if extra else "")


@dataclass
class ValidationReport:
    """Collected violations; an empty report means the value is valid."""

    issues: List[Issue] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.issues

    def add(self, kind: str, where: str, **detail) -> None:
        self.issues.append(Issue(kind, where, detail))

    def extend(self, other: "ValidationReport", prefix: Optional[str] = None) -> None:
        for issue in other.issues:
            where = f"{prefix}/{issue.where}" if prefix else issue.where
            self.issues.append(Issue(issue.kind, where, issue.detail))

    def kinds(self):
        return [issue.kind for issue in self.issues]

    def to_dict(self):
        return {
            "ok": self.ok,
            "issues": [dict(kind=i.kind, where=i.where, detail=i.detail) for i in self.issues],
        }


class CorrkitError(Exception):
    exit_code = 2


class MalformedWordError(CorrkitError):
    pass


class ValidationError(CorrkitError):
    def __init__(self, message: str, report: Optional[ValidationReport] = None):
        super().__init__(message)
        self.report = report or ValidationReport()

    def __str__(self):
        lines = [super().__str__()] + [f"  {issue}" for issue in self.report.issues[:20]]
        return "\n".join(lines)


class SchemaError(CorrkitError):
    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path


class BudgetExceededError(CorrkitError):
    def __init__(self, budget: int, what: str = "enumeration"):
        super().__init__(f"{what} exceeded the budget of {budget} candidate assignments")
        self.budget = budget


class UnsupportedInputError(CorrkitError):
    pass
