"""Check verdicts and counterexample witnesses."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Optional

__all__ = ["CheckReport", "Witness"]


@dataclass(frozen=True)
class Witness:
    """A failing basis tuple and the nonzero defect it produces.

    The defect is an Element, a scalar, or (for bicharacter congruences) a
    plain integer residue; re-evaluating the identity at `indices` must
    reproduce it exactly.
    """

    indices: tuple[int, ...]
    defect: Any


@dataclass(frozen=True)
class CheckReport:
    identity: str
    passed: bool
    witness: Optional[Witness]
    tuples_checked: int
    subject: Optional[str] = None

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"

    def __str__(self):
        name = self.identity if not self.subject else f"{self.identity}[{self.subject}]"
        if self.passed:
            return f"{name}: pass ({self.tuples_checked} tuples)"
        return (
            f"{name}: FAIL at {self.witness.indices} "
            f"with defect {self.witness.defect} "
            f"({self.tuples_checked} tuples scanned)"
        )
