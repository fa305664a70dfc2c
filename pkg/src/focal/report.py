"""Verification reports.

Every identity check returns a ``Report``; the JSON form is
``{"suite": str, "params": {...}, "pass": bool, "defect": ...}``.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .exactmath import Matrix, format_rational


def _jsonable(x):
    if isinstance(x, Fraction):
        return format_rational(x)
    if isinstance(x, Matrix):
        return {"dim": x.dim, "rows": [[format_rational(v) for v in r] for r in x.rows]}
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


@dataclass
class Report:
    suite: str
    params: dict
    passed: bool
    defect: Any = None
    details: dict = field(default_factory=dict)

    def __bool__(self):
        return self.passed

    def to_json(self) -> dict:
        out = {"suite": self.suite, "params": _jsonable(self.params), "pass": self.passed}
        if self.defect is not None:
            out["defect"] = _jsonable(self.defect)
        if self.details:
            out["details"] = _jsonable(self.details)
        return out

    def line(self) -> str:
        params = " ".join(f"{k}={_jsonable(v)}" for k, v in self.params.items())
        return f"{'PASS' if self.passed else 'FAIL'} {self.suite} {params}".rstrip()


def combine(suite: str, params: dict, reports) -> Report:
    """Fold sub-reports into one; the defect lists the failing sub-suites."""
    reports = list(reports)
    failed = [r.to_json() for r in reports if not r.passed]
    return Report(suite, params, not failed, failed or None,
                  {"checks": [r.suite for r in reports]})
