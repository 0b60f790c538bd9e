from dataclasses import dataclass, field
from typing import Any, Dict, List, Tuple

from src.types.enums import CheckStatus


@dataclass
class Violation:
    """One failed identity with the basis tuple that witnesses it."""
    axiom: str
    witness: Tuple[Any, ...]
    detail: str = ""


@dataclass
class Report:
    """Outcome of an exhaustive identity check."""
    name: str
    violations: List[Violation] = field(default_factory=list)
    checked: int = 0
    failures: int = 0  # total failures, witnesses beyond MAX_WITNESSES are dropped
    details: Dict[str, Any] = field(default_factory=dict)

    MAX_WITNESSES = 25

    @property
    def status(self) -> CheckStatus:
        return CheckStatus.PASS if self.failures == 0 else CheckStatus.FAIL

    @property
    def ok(self) -> bool:
        return self.failures == 0

    def tick(self, count: int = 1) -> None:
        self.checked += count

    def fail(self, axiom: str, witness: Tuple[Any, ...], detail: str = "") -> None:
        self.failures += 1
        if len(self.violations) < self.MAX_WITNESSES:
            self.violations.append(Violation(axiom, tuple(witness), detail))

    def merge(self, other: "Report") -> "Report":
        self.checked += other.checked
        self.failures += other.failures
        room = self.MAX_WITNESSES - len(self.violations)
        self.violations.extend(other.violations[:max(room, 0)])
        return self

    def axioms_failed(self) -> List[str]:
        return sorted({v.axiom for v in self.violations})
