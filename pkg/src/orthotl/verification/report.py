"""Report models for the verification suites, and the recorder that fills them."""

from __future__ import annotations

import time
from fractions import Fraction
from typing import Any, Optional

import numpy as np
from pydantic import BaseModel, Field, computed_field

from orthotl.core import matrices as mx
from orthotl.core.errors import PoleError
from orthotl.core.qscalars import LaurentPoly, Scalar, specialize
from orthotl.modules.tensor_rep import TensorVector, specialize_vector
from orthotl.utils.log import get_logger

logger = get_logger(__name__)


class CheckFailure(BaseModel):
    check: str
    inputs: dict[str, Any] = Field(default_factory=dict)
    lhs: str
    rhs: str


class VerificationReport(BaseModel):
    suite: str
    n: int
    shape: Optional[str] = None
    checks_run: int = 0
    failures: list[CheckFailure] = Field(default_factory=list)
    wall_time: float = 0.0
    seed: Optional[int] = None
    delta_sign: Optional[str] = None
    specialization: Optional[str] = None
    notes: dict[str, Any] = Field(default_factory=dict)

    @computed_field  # type: ignore[misc]
    @property
    def passed(self) -> bool:
        return not self.failures


def _specialized(x: Any, v0: Fraction) -> Any:
    if isinstance(x, (Scalar, LaurentPoly, int, Fraction)) and not isinstance(x, bool):
        return specialize(x, v0)
    if isinstance(x, TensorVector):
        return specialize_vector(x, v0)
    if isinstance(x, np.ndarray):
        return mx.specialize_matrix(x, v0)
    if isinstance(x, dict):
        out = {k: _specialized(c, v0) for k, c in x.items()}
        return {k: c for k, c in out.items() if c != 0}
    if isinstance(x, (list, tuple)):
        return [_specialized(c, v0) for c in x]
    return x


def _same(lhs: Any, rhs: Any) -> bool:
    if isinstance(lhs, np.ndarray) and isinstance(rhs, np.ndarray):
        return mx.equal(lhs, rhs)
    if isinstance(lhs, (list, tuple)) and isinstance(rhs, (list, tuple)):
        return len(lhs) == len(rhs) and all(_same(a, b) for a, b in zip(lhs, rhs))
    return bool(lhs == rhs)


def _render(x: Any) -> str:
    if isinstance(x, np.ndarray):
        return str([[str(c) for c in row] for row in x])
    if isinstance(x, dict):
        return "{" + ", ".join(f"{k}: {c}" for k, c in x.items()) + "}"
    return str(x)


class CheckRecorder:
    """Counts checks and collects failures; in specialization mode both sides are compared at v = v0."""

    def __init__(self, suite: str, n: int, v0: Fraction | None = None) -> None:
        self.report = VerificationReport(
            suite=suite, n=n, specialization=None if v0 is None else str(v0)
        )
        self.v0 = v0
        self._started = time.perf_counter()

    def equal(self, check: str, lhs: Any, rhs: Any, **inputs: Any) -> bool:
        self.report.checks_run += 1
        try:
            if self.v0 is not None:
                lhs, rhs = _specialized(lhs, self.v0), _specialized(rhs, self.v0)
            ok = _same(lhs, rhs)
        except PoleError as e:
            ok, lhs, rhs = False, f"pole: {e}", "-"
        if not ok:
            self._fail(check, lhs, rhs, inputs)
        return ok

    def expect(self, check: str, condition: bool, **inputs: Any) -> bool:
        self.report.checks_run += 1
        if not condition:
            self._fail(check, condition, True, inputs)
        return condition

    def note(self, key: str, value: Any) -> None:
        self.report.notes[key] = value

    def _fail(self, check: str, lhs: Any, rhs: Any, inputs: dict[str, Any]) -> None:
        failure = CheckFailure(
            check=check, inputs={k: str(v) for k, v in inputs.items()}, lhs=_render(lhs), rhs=_render(rhs)
        )
        logger.warning("%s: check %r failed for %s", self.report.suite, check, failure.inputs)
        self.report.failures.append(failure)

    def finish(self) -> VerificationReport:
        self.report.wall_time = round(time.perf_counter() - self._started, 4)
        return self.report
