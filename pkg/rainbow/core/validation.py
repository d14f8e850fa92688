"""
Rainbow matching validation

The post-check applied to every witness produced anywhere in the package.
"""

from dataclasses import dataclass
from typing import Literal, Optional

from .hypergraph import Family, RainbowMatching

ReasonCode = Literal["wrong-count", "not-member", "overlap"]


@dataclass(frozen=True)
class ValidationResult:
    valid: bool
    reason: Optional[ReasonCode] = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.valid


def validate_rainbow(F: Family, M: RainbowMatching) -> ValidationResult:
    """One pick per family index 1..t, each a member edge, pairwise disjoint"""
    indices = [i for i, _ in M.picks]
    if indices != list(range(1, F.t + 1)):
        return ValidationResult(False, "wrong-count", f"picked indices {indices} for t={F.t}")

    for i, edge in M.picks:
        if edge not in F[i - 1]:
            return ValidationResult(False, "not-member", f"edge {list(edge)} is not in F_{i}")

    used = set()
    for i, edge in M.picks:
        shared = used.intersection(edge)
        if shared:
            return ValidationResult(False, "overlap", f"F_{i} edge {list(edge)} reuses {sorted(shared)}")
        used.update(edge)

    return ValidationResult(True)
