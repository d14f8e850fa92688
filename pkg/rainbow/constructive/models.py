"""
Pydantic models for constructive algorithm traces
"""

from dataclasses import dataclass, field
from typing import Dict, List, Literal, Optional

from pydantic import BaseModel, Field

from ..core.hypergraph import RainbowMatching


# ============================================================================
# Two-phase greedy
# ============================================================================

class VertexChoice(BaseModel):
    """Phase 1 pick x_s with its degree in F_s - X_{s-1}"""
    step: int = Field(..., ge=1)
    vertex: int
    residual_degree: int = Field(..., description="Degree in F_s after deleting x_1..x_{s-1}")


class EdgeChoice(BaseModel):
    """Phase 2 pick e_s through x_s"""
    step: int = Field(..., ge=1)
    edge: List[int]


class GreedyTrace(BaseModel):
    chosen_vertices: List[VertexChoice] = Field(default_factory=list)
    # Selection order: s = t down to 1
    chosen_edges: List[EdgeChoice] = Field(default_factory=list)


# ============================================================================
# Partite recursion
# ============================================================================

RecursionCase = Literal["BASE-T1", "BASE-BIPARTITE", "LINK-RECURSE", "EXTEND-DISJOINT", "HIGH-DEGREE-VERTEX"]


class MatchingPick(BaseModel):
    family: int = Field(..., description="1-based index in the input family")
    edge: List[int]


class RecursionEvent(BaseModel):
    """
    One node of the recursion, recorded in pre-order

    `families` lists the input indices of the current sub-instance in their
    current order; after a reindex the moved family is last.
    """
    depth: int = Field(..., ge=0)
    case: RecursionCase
    t: int
    r: int
    families: List[int]
    reindexed: Optional[int] = Field(default=None, description="Input index moved to position t")
    vertex: Optional[int] = Field(default=None, description="High-degree vertex x of F_t")
    vertices: Optional[List[int]] = Field(default=None, description="Distinct representatives x_1..x_t")
    threshold: Optional[int] = Field(default=None, description="Degree bound compared against")
    degree: Optional[int] = Field(default=None, description="Degree observed against the threshold")
    high_degree_counts: Optional[List[int]] = None
    edge: Optional[List[int]] = Field(default=None, description="Edge added at this node")
    matching: List[MatchingPick] = Field(default_factory=list, description="Result of this sub-instance")
    greedy: Optional[GreedyTrace] = None


class RecursionTrace(BaseModel):
    n: int
    events: List[RecursionEvent] = Field(default_factory=list)

    @property
    def cases(self) -> List[str]:
        return [e.case for e in self.events]


# ============================================================================
# Randomized sampler
# ============================================================================

@dataclass
class CertifyOutcome:
    """Sampler result; `found` False means Exhausted, never nonexistence"""
    found: bool
    trials: int
    indices: List[int] = field(default_factory=list)
    matching: Optional[RainbowMatching] = None
    successes: int = 0

    @property
    def exhausted(self) -> bool:
        return not self.found

    def to_dict(self) -> Dict:
        return {
            "verdict": "matching" if self.found else "exhausted",
            "indices": self.indices,
            "witness": self.matching.to_dict() if self.matching else None,
            "trials": self.trials,
            "successes": self.successes,
        }
