"""
Pydantic models for verification campaigns and inequality checks
"""

from typing import Any, Dict, List, Literal, Optional

from pydantic import BaseModel, Field, field_validator

CampaignTarget = Literal[
    "theorem12",
    "lemma21",
    "theorem13",
    "theorem14",
    "prop23",
    "corollary26",
    "question16-explore",
    "oracle",
    "partite-tight",
]

Expectation = Literal["matching", "no-matching", "agree", "explore"]

InstanceVerdict = Literal["matching", "no-matching", "budget-exceeded"]


# ============================================================================
# Campaign Models
# ============================================================================

class CampaignSpec(BaseModel):
    """One campaign: a target and the (n, k, t) grid it runs over"""
    target: CampaignTarget
    n: List[int] = Field(..., min_length=1, description="Universe or part sizes")
    k: List[int] = Field(default_factory=lambda: [2], min_length=1, description="Uniformities")
    t: List[int] = Field(default_factory=lambda: [2], min_length=1, description="Matching sizes")
    trials: int = Field(default=100, ge=1, description="Random instances per cell")
    seed: int = Field(default=0, ge=0)
    node_budget: Optional[int] = Field(default=None, ge=1)
    include_below_hypothesis: bool = Field(
        default=False,
        description="Also run cells outside the statement's hypothesis, flagged exploratory",
    )
    full_families: bool = Field(default=False, description="prop23: use complete families")
    samples: int = Field(default=10_000, ge=1, description="prop23: permutations for the indicator statistics")

    @field_validator("n", "k", "t")
    @classmethod
    def _positive(cls, values: List[int]) -> List[int]:
        if any(v < 1 for v in values):
            raise ValueError(f"grid values must be positive: {values}")
        return sorted(set(values))


class CellPlan(BaseModel):
    """A grid point resolved into what to run and what to expect"""
    key: str
    target: CampaignTarget
    variant: str = "random"
    n: int
    k: int
    t: int
    sizes: List[int] = Field(default_factory=list)
    expectation: Expectation
    conforming: bool
    instances: int
    skip_reason: Optional[str] = None


class InstanceResult(BaseModel):
    index: int
    verdict: InstanceVerdict
    failure: Optional[str] = None
    hypothesis_violation: bool = False
    family: Optional[Dict[str, Any]] = Field(default=None, description="Family document, kept for failures")
    witness: Optional[List[Dict[str, Any]]] = None
    millis: float = 0.0
    nodes: int = 0


class CellReport(BaseModel):
    key: str
    target: CampaignTarget
    variant: str
    n: int
    k: int
    t: int
    sizes: List[int]
    expectation: Expectation
    conforming: bool
    seed: int
    skipped: Optional[str] = None
    instances: int = 0
    positives: int = 0
    refutations: int = 0
    budget_exceeded: int = 0
    hypothesis_violations: int = 0
    failures: int = 0
    failed_indices: List[int] = Field(default_factory=list)
    counterexamples: List[InstanceResult] = Field(default_factory=list)
    stats: Dict[str, float] = Field(default_factory=dict)
    millis: float = 0.0

    @property
    def balanced(self) -> bool:
        return self.positives + self.refutations + self.budget_exceeded == self.instances


class CampaignReport(BaseModel):
    spec: CampaignSpec
    version: str
    environment: Dict[str, str] = Field(default_factory=dict)
    cells: List[CellReport] = Field(default_factory=list)

    @property
    def conforming_failures(self) -> int:
        return sum(c.failures for c in self.cells if c.conforming and not c.skipped)

    @property
    def budget_exceeded(self) -> int:
        return sum(c.budget_exceeded for c in self.cells if not c.skipped)

    @property
    def ok(self) -> bool:
        return self.conforming_failures == 0


# ============================================================================
# Inequality Models
# ============================================================================

class Lemma32Check(BaseModel):
    t: float
    n: float
    k1: float
    k2: float
    value: float
    derivative: float
    decreasing_region: bool = Field(..., description="n > e k1^2 t, where the derivative is negative")


class Lemma34Check(BaseModel):
    n: int
    ks: List[int]
    lhs: float
    rhs: float
    verdict: Literal["holds", "fails", "indeterminate"]
    sum_k: int
    range_low: float
    range_high: float
    conforming: bool
    epsilon: float

    @property
    def exploratory(self) -> bool:
        return not self.conforming

    @property
    def holds(self) -> bool:
        return self.verdict == "holds"
