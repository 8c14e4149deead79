"""Structured outcome of one identity check."""
from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

PASS = "PASS"
FAIL = "FAIL"
INCONCLUSIVE = "INCONCLUSIVE"
UNSUPPORTED = "UNSUPPORTED-DOMAIN"
STATUSES = (PASS, FAIL, INCONCLUSIVE, UNSUPPORTED)


@dataclass
class VerificationReport:
    check: str
    params: dict[str, Any]
    status: str
    residual: Any = None
    witness: Any = None
    details: dict[str, Any] = field(default_factory=dict)
    wall_time: float = 0.0

    def __post_init__(self) -> None:
        if self.status not in STATUSES:
            raise ValueError(f"unknown status {self.status!r}")

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def to_dict(self) -> dict[str, Any]:
        return {
            "check": self.check,
            "params": jsonable(self.params),
            "status": self.status,
            "residual": jsonable(self.residual),
            "witness": jsonable(self.witness),
            "details": jsonable(self.details),
            "wall_time": round(self.wall_time, 6),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))

    def human(self) -> str:
        line = f"[{self.status}] {self.check} {json.dumps(jsonable(self.params), sort_keys=True)}"
        if self.residual is not None:
            line += f" residual={jsonable(self.residual)}"
        if self.witness is not None and self.status != PASS:
            line += f" witness={json.dumps(jsonable(self.witness), sort_keys=True)}"
        return line


def jsonable(x: Any) -> Any:
    """Convert values to JSON-safe data; decimals become strings to keep full precision."""
    if x is None or isinstance(x, (bool, int, str)):
        return x
    if isinstance(x, float):
        return repr(x)
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    if hasattr(x, "to_json"):
        return x.to_json()
    return str(x)


def stamp(report: VerificationReport, start: float) -> VerificationReport:
    report.wall_time = time.perf_counter() - start
    return report
