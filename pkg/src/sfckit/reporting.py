"""Report types shared by the verification routines.

Verification never mutates its inputs and always produces a report; structural
problems with the input data itself raise instead (see the per-module error
classes).  Reports are deterministic: identical inputs give identical reports,
independent of the worker count used to produce them.
"""

from __future__ import annotations

from dataclasses import dataclass, field

DEFAULT_MAX_VIOLATIONS = 25


@dataclass
class Violation:
    """One failed instance of a checked identity."""

    instance: tuple
    lhs: object = None
    rhs: object = None
    detail: str = ""

    def render(self) -> str:
        if self.detail:
            return f"{self.instance}: {self.detail}"
        return f"{self.instance}: lhs = {self.lhs}, rhs = {self.rhs}"

    def to_json(self) -> dict:
        out: dict = {"instance": list(self.instance)}
        if self.lhs is not None:
            out["lhs"] = str(self.lhs)
        if self.rhs is not None:
            out["rhs"] = str(self.rhs)
        if self.detail:
            out["detail"] = self.detail
        return out


@dataclass
class CheckReport:
    """Outcome of one identity check over an enumerated instance space.

    ``violations`` holds at most the requested bound; ``total_violations``
    always counts all of them.
    """

    name: str
    ok: bool
    checked: int
    violations: list[Violation] = field(default_factory=list)
    total_violations: int = 0
    warnings: list[str] = field(default_factory=list)

    def summary(self) -> str:
        status = "pass" if self.ok else "FAIL"
        lines = [f"{self.name}: {status} ({self.checked} instances checked)"]
        if not self.ok:
            lines.append(
                f"  {self.total_violations} violation(s); showing {len(self.violations)}:"
            )
            lines.extend(f"    {v.render()}" for v in self.violations)
        for w in self.warnings:
            lines.append(f"  warning: {w}")
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "ok": self.ok,
            "checked": self.checked,
            "total_violations": self.total_violations,
            "violations": [v.to_json() for v in self.violations],
            "warnings": list(self.warnings),
        }


@dataclass
class LawResult:
    """Pass/fail for one structural law, with every violated index tuple."""

    law: str
    ok: bool
    violations: list = field(default_factory=list)


@dataclass
class ValidationReport:
    subject: str
    laws: list[LawResult] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(law.ok for law in self.laws)

    def law(self, name: str) -> LawResult:
        for law in self.laws:
            if law.law == name:
                return law
        raise KeyError(name)

    def summary(self) -> str:
        status = "pass" if self.ok else "FAIL"
        lines = [f"{self.subject}: {status}"]
        for law in self.laws:
            mark = "ok" if law.ok else "FAIL"
            lines.append(f"  {law.law}: {mark}")
            for v in law.violations[:DEFAULT_MAX_VIOLATIONS]:
                lines.append(f"    {v}")
            if len(law.violations) > DEFAULT_MAX_VIOLATIONS:
                lines.append(f"    ... {len(law.violations)} total")
        for w in self.warnings:
            lines.append(f"  warning: {w}")
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {
            "subject": self.subject,
            "ok": self.ok,
            "laws": [
                {
                    "law": law.law,
                    "ok": law.ok,
                    "violations": [list(map(str, v)) if isinstance(v, tuple) else str(v) for v in law.violations],
                }
                for law in self.laws
            ],
            "warnings": list(self.warnings),
        }
