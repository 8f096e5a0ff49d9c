from __future__ import annotations

from dataclasses import dataclass, field

PASS, FAIL, VIOLATED = "PASS", "FAIL", "VIOLATED"


@dataclass(frozen=True)
class Check:
    name: str
    status: str
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.status != FAIL

    def line(self) -> str:
        tail = f": {self.detail}" if self.detail else ""
        return f"{self.status} {self.name}{tail}"


@dataclass
class Report:
    """Ordered named checks, rendered one ``PASS``/``FAIL`` line each.

    ``VIOLATED`` marks a law that is known not to hold and is reported with
    its witness; it does not make the report fail.
    """

    title: str = ""
    checks: list[Check] = field(default_factory=list)

    def check(self, name: str, ok, detail: str = "") -> bool:
        self.checks.append(Check(name, PASS if ok else FAIL, detail))
        return bool(ok)

    def violated(self, name: str, detail: str):
        self.checks.append(Check(name, VIOLATED, detail))

    def extend(self, other: Report, prefix: str = ""):
        for c in other.checks:
            self.checks.append(Check(prefix + c.name, c.status, c.detail))

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.ok]

    @property
    def violations(self) -> list[Check]:
        return [c for c in self.checks if c.status == VIOLATED]

    def lines(self) -> list[str]:
        return [c.line() for c in self.checks]

    def __str__(self):
        return "\n".join(self.lines())
