"""Check reports: one record per verified case, deterministic JSON/CSV/text output."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterable


def jsonable(value: Any) -> Any:
    """Render exact values for JSON: Fractions as strings, objects via to_dict()."""
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, Fraction):
        return str(value) if value.denominator != 1 else value.numerator
    if isinstance(value, int):
        return value
    if isinstance(value, (str, float)):
        return value
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    if hasattr(value, "to_dict"):
        return value.to_dict()
    return str(value)


@dataclass(frozen=True)
class CaseResult:
    id: str
    paper_ref: str
    expected: Any
    observed: Any
    passed: bool
    notes: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        out = {
            "id": self.id,
            "paper_ref": self.paper_ref,
            "expected": jsonable(self.expected),
            "observed": jsonable(self.observed),
            "pass": bool(self.passed),
        }
        if self.notes:
            out["notes"] = jsonable(self.notes)
        return out


@dataclass
class Report:
    suite: str
    cases: list[CaseResult] = field(default_factory=list)
    notes: dict = field(default_factory=dict)

    def add(self, id: str, paper_ref: str, expected: Any, observed: Any,
            passed: bool | None = None, **notes) -> CaseResult:
        if passed is None:
            passed = expected == observed
        case = CaseResult(id, paper_ref, expected, observed, bool(passed), notes)
        self.cases.append(case)
        return case

    def extend(self, other: "Report", prefix: str = "") -> None:
        for c in other.cases:
            self.cases.append(CaseResult(prefix + c.id, c.paper_ref, c.expected, c.observed,
                                         c.passed, c.notes))

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.cases)

    def failures(self) -> list[CaseResult]:
        return [c for c in self.cases if not c.passed]

    def summary(self) -> dict:
        n_pass = sum(c.passed for c in self.cases)
        return {
            "total": len(self.cases),
            "passed": n_pass,
            "failed": len(self.cases) - n_pass,
            "all_pass": n_pass == len(self.cases),
        }

    def sorted_cases(self) -> list[CaseResult]:
        return sorted(self.cases, key=lambda c: c.id)

    def to_dict(self) -> dict:
        out = {
            "suite": self.suite,
            "cases": [c.to_dict() for c in self.sorted_cases()],
            "summary": self.summary(),
        }
        if self.notes:
            out["notes"] = jsonable(self.notes)
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["suite", "id", "paper_ref", "expected", "observed", "pass"])
        for c in self.sorted_cases():
            d = c.to_dict()
            writer.writerow([
                self.suite, d["id"], d["paper_ref"],
                json.dumps(d["expected"], sort_keys=True),
                json.dumps(d["observed"], sort_keys=True),
                "PASS" if c.passed else "FAIL",
            ])
        return buf.getvalue()

    def to_text(self) -> str:
        lines = [f"== {self.suite} =="]
        for c in self.sorted_cases():
            d = c.to_dict()
            status = "PASS" if c.passed else "FAIL"
            lines.append(f"{status}  {c.id:<40} expected={json.dumps(d['expected'], sort_keys=True)}"
                         f" observed={json.dumps(d['observed'], sort_keys=True)}")
        s = self.summary()
        lines.append(f"-- {s['passed']}/{s['total']} passed")
        for k, v in sorted(self.notes.items()):
            lines.append(f"note: {k}: {v}")
        return "\n".join(lines) + "\n"


def merge(suite: str, reports: Iterable[Report]) -> Report:
    out = Report(suite)
    for r in reports:
        out.extend(r, prefix=f"{r.suite}/")
        for k, v in r.notes.items():
            out.notes[f"{r.suite}/{k}"] = v
    return out
