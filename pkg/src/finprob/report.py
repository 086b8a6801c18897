"""Suite configuration and deterministic machine-readable reports."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

from .errors import InputError
from .measure import Mode


@dataclass(frozen=True)
class SuiteConfig:
    """Knobs shared by every verification suite.

    Defaults match the desk-scale acceptance setup: seed 0, ground sets up to
    five points, denominators up to twelve, five hundred cases.
    """

    seed: int = 0
    max_ground_size: int = 5
    max_denominator: int = 12
    cases: int = 500
    mode: Mode = Mode.SIGMA
    format: str = "json"
    method: str = "both"
    k: int = 3

    def __post_init__(self):
        object.__setattr__(self, "mode", Mode(self.mode))
        if self.seed < 0:
            raise InputError("seed must be nonnegative", "$.seed")
        for name in ("max_ground_size", "max_denominator", "cases", "k"):
            if getattr(self, name) < 1:
                raise InputError(f"{name} must be positive", f"$.{name}")
        if self.format not in ("json", "text"):
            raise InputError(f"unknown format {self.format!r}", "$.format")
        if self.method not in ("lp", "subsets", "both"):
            raise InputError(f"unknown method {self.method!r}", "$.method")

    def to_payload(self) -> dict:
        return {
            "seed": self.seed,
            "max_ground_size": self.max_ground_size,
            "max_denominator": self.max_denominator,
            "cases": self.cases,
            "mode": self.mode.value,
            "method": self.method,
            "k": self.k,
        }


@dataclass(frozen=True)
class CheckOutcome:
    name: str
    passed: int
    failed: int
    witnesses: tuple[Any, ...] = ()

    @property
    def ok(self) -> bool:
        return self.failed == 0


@dataclass
class Report:
    """Per-suite pass/fail counts plus serialized witnesses.

    Wall time is recorded on the object for operators but deliberately kept
    out of the serialized payload so that reports are byte-identical across
    runs of the same configuration.
    """

    suite: str
    config: dict
    checks: list[CheckOutcome] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def add(self, name: str, passed: int, failed: int, witnesses=()) -> None:
        self.checks.append(CheckOutcome(name, passed, failed, tuple(witnesses)))

    def extend(self, other: "Report") -> None:
        for check in other.checks:
            self.checks.append(
                CheckOutcome(
                    f"{other.suite}.{check.name}",
                    check.passed,
                    check.failed,
                    check.witnesses,
                )
            )
        for note in other.notes:
            if note not in self.notes:
                self.notes.append(note)

    def to_payload(self) -> dict:
        return {
            "format": 1,
            "suite": self.suite,
            "config": self.config,
            "ok": self.ok,
            "notes": list(self.notes),
            "checks": [
                {
                    "name": c.name,
                    "passed": c.passed,
                    "failed": c.failed,
                    "witnesses": [_jsonable(w) for w in c.witnesses],
                }
                for c in self.checks
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_payload(), sort_keys=True, indent=2) + "\n"

    def to_text(self) -> str:
        lines = [f"suite {self.suite}: {'PASS' if self.ok else 'FAIL'}"]
        for c in self.checks:
            status = "pass" if c.ok else "FAIL"
            lines.append(f"  [{status}] {c.name}: {c.passed} passed, {c.failed} failed")
            for w in c.witnesses[:3]:
                lines.append(f"      witness: {_jsonable(w)}")
        return "\n".join(lines) + "\n"

    def render(self, fmt: str) -> str:
        return self.to_json() if fmt == "json" else self.to_text()


def _jsonable(value: Any):
    """Best-effort canonical JSON projection of witness values."""
    from fractions import Fraction

    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (str, int, float, bool)) or value is None:
        return value
    return repr(value)
