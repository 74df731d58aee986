"""Structured verification reports."""

from __future__ import annotations

import json
import time
from collections import Counter
from dataclasses import dataclass, field
from typing import Any


@dataclass
class Report:
    """Outcome of one suite on one (group, c) pair."""

    suite: str
    group: str
    coxeter: str
    applicable: bool = True
    checks: Counter = field(default_factory=Counter)
    failures: Counter = field(default_factory=Counter)
    first_counterexample: str | None = None
    runtime_s: float = 0.0
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, cond: bool, key: str, witness=None) -> bool:
        self.checks[key] += 1
        if not cond:
            self.failures[key] += 1
            if self.first_counterexample is None:
                text = witness() if callable(witness) else witness
                self.first_counterexample = f"{key}: {text}"
        return bool(cond)

    def to_dict(self) -> dict[str, Any]:
        return {
            "suite": self.suite,
            "group": self.group,
            "coxeter": self.coxeter,
            "applicable": self.applicable,
            "passed": self.passed,
            "checks": dict(sorted(self.checks.items())),
            "failures": dict(sorted(self.failures.items())),
            "first_counterexample": self.first_counterexample,
            "runtime_s": round(self.runtime_s, 4),
            "notes": list(self.notes),
        }


class Timer:
    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.t0


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)
