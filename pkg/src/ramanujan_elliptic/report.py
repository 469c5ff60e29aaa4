from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Union

EXACT_ZERO = "exact-zero"

Residual = Union[float, str]


@dataclass
class VerificationReport:
    """Outcome of one named check.

    ``max_abs_residual`` is either a float or the string ``"exact-zero"`` for
    exact series checks that came out identically zero. The tolerance lives in
    ``params["tol"]`` for numeric checks.
    """

    suite: str
    params: dict[str, Any] = field(default_factory=dict)
    max_abs_residual: Residual = 0.0
    passed: bool = False
    runtime_ms: int = 0

    @classmethod
    def numeric(cls, suite: str, residual: float, tol: float, **params: Any) -> "VerificationReport":
        params["tol"] = tol
        ok = residual <= tol  # NaN compares False, as it should
        return cls(suite, params, float(residual), ok)

    @classmethod
    def exact(cls, suite: str, max_abs: Fraction | int, **params: Any) -> "VerificationReport":
        if max_abs == 0:
            return cls(suite, params, EXACT_ZERO, True)
        return cls(suite, params, float(max_abs), False)

    def to_dict(self) -> dict[str, Any]:
        return {
            "suite": self.suite,
            "params": self.params,
            "max_abs_residual": self.max_abs_residual,
            "pass": self.passed,
            "runtime_ms": self.runtime_ms,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=False)

    def summary(self) -> str:
        res = self.max_abs_residual
        res_s = res if isinstance(res, str) else f"{res:.3e}"
        status = "PASS" if self.passed else "FAIL"
        keys = ", ".join(f"{k}={_fmt_param(v)}" for k, v in self.params.items())
        return f"[{status}] {self.suite}: max_abs_residual={res_s} ({keys}) {self.runtime_ms} ms"


def _fmt_param(v: Any) -> str:
    if isinstance(v, float):
        return f"{v:.6g}"
    if isinstance(v, (list, tuple)) and len(v) > 6:
        return f"[{len(v)} values]"
    return str(v)


def stamp(report: VerificationReport, t0: float) -> VerificationReport:
    report.runtime_ms = int(round((time.perf_counter() - t0) * 1000))
    return report
