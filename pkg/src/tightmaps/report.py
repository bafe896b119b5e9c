"""Pass/fail bookkeeping shared by the verification suites."""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any


def _plain(x: Any) -> Any:
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, (list, tuple)):
        return [_plain(y) for y in x]
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if isinstance(x, (int, float, str, bool)) or x is None:
        return x
    return str(x)


@dataclass
class Report:
    suite: str
    cases: int = 0
    failures: list[dict] = field(default_factory=list)
    wall_time: float = 0.0
    max_failures: int = 20
    _started: float = field(default_factory=time.perf_counter, repr=False)

    def check(self, name: str, expected: Any, got: Any, **inputs: Any) -> bool:
        self.cases += 1
        if expected == got:
            return True
        if len(self.failures) < self.max_failures:
            self.failures.append(
                {"check": name, "inputs": _plain(inputs), "expected": _plain(expected), "got": _plain(got)}
            )
        else:
            self.failures.append({"check": name, "truncated": True})
        return False

    def merge(self, other: "Report") -> "Report":
        self.cases += other.cases
        self.failures.extend(other.failures)
        return self

    def finish(self) -> "Report":
        self.wall_time = time.perf_counter() - self._started
        return self

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "cases": self.cases,
            "failures": self.failures[: self.max_failures],
            "n_failures": len(self.failures),
            "wall_time": round(self.wall_time, 3),
            "ok": self.ok,
        }
