"""Check records and suite reports with a deterministic JSON form."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

SCHEMA = 1
STATUSES = ("pass", "fail", "skip")


@dataclass
class Check:
    name: str
    params: dict
    status: str
    detail: str = ""
    values: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"bad status {self.status!r}")

    def sort_key(self):
        return (self.name, json.dumps(self.params, sort_keys=True))

    def as_dict(self):
        out = {"name": self.name, "params": self.params, "status": self.status,
               "detail": self.detail}
        if self.values:
            out["values"] = self.values
        return out


def check(name: str, params: dict, ok: bool, detail: str = "", **values) -> Check:
    """Pass/fail record; ``values`` (e.g. formula=, brute=) are kept either way."""
    return Check(name, params, "pass" if ok else "fail", "" if ok else detail, values)


@dataclass
class SuiteReport:
    suite: str
    params: dict
    checks: list = field(default_factory=list)
    elapsed_ms: int = 0
    extra: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(c.status != "fail" for c in self.checks)

    def counts(self) -> dict:
        return {s: sum(c.status == s for c in self.checks) for s in STATUSES}

    def sorted_checks(self):
        return sorted(self.checks, key=Check.sort_key)

    def as_dict(self, timing: bool = False) -> dict:
        return {
            "schema": SCHEMA,
            "suite": self.suite,
            "params": self.params,
            "summary": self.counts(),
            "checks": [c.as_dict() for c in self.sorted_checks()],
            "extra": self.extra,
            "elapsed_ms": self.elapsed_ms if timing else 0,
        }

    def to_json(self, timing: bool = False) -> str:
        return json.dumps(self.as_dict(timing), sort_keys=True, indent=2, ensure_ascii=False)

    def to_text(self, timing: bool = False) -> str:
        lines = [f"suite {self.suite} {json.dumps(self.params, sort_keys=True)}"]
        for c in self.sorted_checks():
            p = " ".join(f"{k}={v}" for k, v in sorted(c.params.items()))
            line = f"  {c.status.upper():4}  {c.name}  {p}"
            if c.detail:
                line += f"  ({c.detail})"
            lines.append(line)
        summary = " ".join(f"{k}={v}" for k, v in self.counts().items())
        lines.append(f"summary: {summary}")
        if timing:
            lines.append(f"elapsed_ms: {self.elapsed_ms}")
        return "\n".join(lines)


def short(poly, limit: int = 160) -> str:
    text = str(poly)
    return text if len(text) <= limit else text[:limit] + " ..."
