"""Pass/fail bookkeeping shared by every verification suite."""
from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass
class Suite:
    name: str
    instances: int = 0
    failures: list[str] = field(default_factory=list)
    status: str = "pass"    # "pass", "fail" or "not comparable"

    @property
    def ok(self) -> bool:
        return not self.failures

    def check(self, cond: bool, label: str) -> bool:
        self.instances += 1
        if not cond:
            self.failures.append(label)
            self.status = "fail"
        return bool(cond)

    def as_dict(self) -> dict:
        return {"name": self.name, "instances": self.instances,
                "failures": list(self.failures), "status": self.status}


@dataclass
class Report:
    suites: list[Suite] = field(default_factory=list)
    meta: dict = field(default_factory=dict)

    def suite(self, name: str) -> Suite:
        for s in self.suites:
            if s.name == name:
                return s
        s = Suite(name)
        self.suites.append(s)
        return s

    def extend(self, other: "Report") -> "Report":
        for s in other.suites:
            mine = self.suite(s.name)
            mine.instances += s.instances
            mine.failures.extend(s.failures)
            if s.status != "pass":
                mine.status = s.status
        self.meta.update(other.meta)
        return self

    @property
    def ok(self) -> bool:
        return all(s.ok for s in self.suites)

    def first_failure(self) -> tuple[str, str] | None:
        for s in self.suites:
            if s.failures:
                return s.name, s.failures[0]
        return None

    def as_dict(self) -> dict:
        out = dict(self.meta)
        out["suites"] = [s.as_dict() for s in self.suites]
        return out

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2, sort_keys=True)

    def to_text(self) -> str:
        lines = []
        for s in self.suites:
            mark = "ok" if s.status == "pass" else s.status.upper()
            lines.append("%-48s %6d  %s" % (s.name, s.instances, mark))
            lines.extend("    failed: %s" % f for f in s.failures[:5])
        return "\n".join(lines)
