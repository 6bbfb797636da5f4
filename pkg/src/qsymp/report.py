"""Structured pass/fail evidence for operator identity checks."""

from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass
class RelationReport:
    id: str
    n: int
    cutoff: int
    sector: str = ""
    status: str = "pass"
    witness: dict | None = None
    elapsed_ms: int = 0

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json(self) -> str:
        body = {
            "id": self.id,
            "n": self.n,
            "cutoff": self.cutoff,
            "sector": self.sector,
            "status": self.status,
            "elapsed_ms": self.elapsed_ms,
        }
        if self.witness is not None:
            body["witness"] = self.witness
        return json.dumps(body, sort_keys=True)

    def to_md(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        extra = "" if self.witness is None else f"  witness: {self.witness}"
        return f"- [{mark}] {self.id} (n={self.n}, cutoff={self.cutoff}, sector={self.sector}){extra}"


def all_passed(reports) -> bool:
    return all(r.passed for r in reports)


def failures(reports):
    return [r for r in reports if not r.passed]


def dump_stream(reports, fmt: str = "json") -> str:
    if fmt == "json":
        return "\n".join(r.to_json() for r in reports)
    return "\n".join(r.to_md() for r in reports)
