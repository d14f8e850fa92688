"""
Solver models: configuration and verdict types
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Literal, Optional

from pydantic import BaseModel, Field

from ..core.hypergraph import Family, RainbowMatching

OrderHeuristic = Literal["input-order", "smallest-family-first", "min-degree-vertex"]


class SolverConfig(BaseModel):
    """Search knobs; none of them can change a verdict"""
    node_budget: Optional[int] = Field(default=None, ge=1, description="Max search nodes (None = unlimited)")
    order_heuristic: OrderHeuristic = Field(
        default="smallest-family-first",
        description="Family processing order",
    )
    seed: int = Field(default=0, ge=0, description="Randomized tie-breaking only")


class Verdict(Enum):
    """Outcome of an exact search"""
    MATCHING = "matching"
    NO_MATCHING = "no-matching"
    BUDGET_EXCEEDED = "budget-exceeded"


@dataclass
class SolveOutcome:
    verdict: Verdict
    matching: Optional[RainbowMatching] = None
    nodes: int = 0
    pruned: int = 0
    millis: float = 0.0

    @property
    def found(self) -> bool:
        return self.verdict is Verdict.MATCHING

    def to_dict(self) -> Dict:
        return {
            "verdict": self.verdict.value,
            "witness": self.matching.to_dict() if self.matching else None,
            "nodes": self.nodes,
            "pruned": self.pruned,
            "timing": {"millis": round(self.millis, 3)},
        }


@dataclass
class ExtremalResult:
    """Best family without a rainbow matching found by local search"""
    family: Family
    product: int
    sizes: List[int]
    evaluations: int
    restarts: int
    budget_exhausted: bool
    verified: bool
    # Local search gives lower-bound witnesses only
    certified_optimal: bool = False
    history: List[int] = field(default_factory=list)

    def to_dict(self) -> Dict:
        return {
            "product": self.product,
            "sizes": self.sizes,
            "evaluations": self.evaluations,
            "restarts": self.restarts,
            "budget_exhausted": self.budget_exhausted,
            "verified_no_matching": self.verified,
            "certified_optimal": self.certified_optimal,
            "best_products": self.history,
            "family": self.family.to_dict(),
        }
