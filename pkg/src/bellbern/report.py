from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .numeric import format_rational


@dataclass(frozen=True)
class Counterexample:
    index: int
    lhs: Fraction
    rhs: Fraction
    note: str = ""

    def to_json(self) -> dict[str, Any]:
        d: dict[str, Any] = {
            "index": self.index,
            "lhs": format_rational(self.lhs),
            "rhs": format_rational(self.rhs),
        }
        if self.note:
            d["note"] = self.note
        return d


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of checking one identity over an index range.

    ``counterexample`` is the first failure, and is None exactly when
    ``passed`` is true.
    """

    identity: str
    lo: int
    hi: int
    passed: bool
    checked: int
    counterexample: Counterexample | None = None
    details: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.passed and self.counterexample is not None:
            raise ValueError("a passing report cannot carry a counterexample")
        if not self.passed and self.counterexample is None:
            raise ValueError("a failing report needs a counterexample")

    def __bool__(self) -> bool:
        return self.passed

    def to_json(self) -> dict[str, Any]:
        return {
            "identity": self.identity,
            "range": [self.lo, self.hi],
            "passed": self.passed,
            "checked": self.checked,
            "counterexample": None if self.counterexample is None else self.counterexample.to_json(),
            "details": self.details,
        }

    def to_text(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        lines = [f"identity {self.identity}: {status} ({self.checked} checks, index {self.lo}..{self.hi})"]
        for key, value in self.details.items():
            lines.append(f"  {key}: {value}")
        if self.counterexample is not None:
            c = self.counterexample
            where = f" [{c.note}]" if c.note else ""
            lines.append(
                f"  counterexample at index {c.index}{where}: "
                f"lhs = {format_rational(c.lhs)}, rhs = {format_rational(c.rhs)}"
            )
        return "\n".join(lines)
