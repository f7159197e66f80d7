"""Verification reports: a named list of checks with pass/fail details."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any


def _plain(x: Any) -> Any:
    if isinstance(x, Fraction):
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    if isinstance(x, (bool, int, float, str)) or x is None:
        return x
    return str(x)


@dataclass
class Check:
    id: str
    ok: bool
    detail: Any = None


@dataclass
class Report:
    suite: str
    pair: str = "O':O"
    checks: list[Check] = field(default_factory=list)
    started: float = field(default_factory=time.perf_counter)
    seconds: float | None = None

    def add(self, id: str, ok: bool, detail: Any = None) -> bool:
        self.checks.append(Check(id, bool(ok), detail))
        return bool(ok)

    def extend(self, other: "Report") -> None:
        self.checks.extend(other.checks)

    def finish(self) -> "Report":
        self.seconds = time.perf_counter() - self.started
        return self

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.ok]

    def get(self, id: str) -> Check:
        for c in self.checks:
            if c.id == id:
                return c
        raise KeyError(id)

    def to_json_obj(self) -> dict:
        checks = sorted(self.checks, key=lambda c: c.id)
        return {
            "suite": self.suite,
            "pair": self.pair,
            "checks": [{"id": c.id, "status": "pass" if c.ok else "fail", "detail": _plain(c.detail)} for c in checks],
            "summary": {
                "total": len(checks),
                "passed": sum(c.ok for c in checks),
                "failed": sum(not c.ok for c in checks),
                "seconds": None if self.seconds is None else round(self.seconds, 3),
            },
        }

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_json_obj(), indent=indent)

    def summary_lines(self) -> list[str]:
        return [f"{'PASS' if c.ok else 'FAIL'}  {c.id}" + ("" if c.ok or c.detail is None else f"  {_plain(c.detail)}")
                for c in sorted(self.checks, key=lambda c: c.id)]
