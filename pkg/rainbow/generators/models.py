"""
Pydantic models for construction requests
"""

from typing import List, Literal, Optional

from pydantic import BaseModel, Field, model_validator

ConstructionKind = Literal[
    "star",
    "cover",
    "clique",
    "partite-threshold",
    "theorem13-tight",
    "complete",
    "random-uniform",
    "random-partite",
]

# Parameters each kind cannot do without
_REQUIRED = {
    "star": ("k",),
    "cover": ("k", "t"),
    "clique": ("k", "t"),
    "partite-threshold": ("k", "t"),
    "theorem13-tight": ("ks",),
    "complete": ("k",),
    "random-uniform": ("ks", "sizes"),
    "random-partite": ("ks", "sizes"),
}


class ConstructionSpec(BaseModel):
    """One generator invocation; validated per kind before generation"""
    kind: ConstructionKind
    n: int = Field(..., ge=1, description="Universe size (part size for partite kinds)")
    k: Optional[int] = Field(default=None, ge=1, description="Uniformity for single-hypergraph kinds")
    ks: Optional[List[int]] = Field(default=None, description="Uniformities, one per family")
    t: Optional[int] = Field(default=None, ge=1, description="Matching size parameter; also the number of copies")
    center: int = Field(default=1, ge=1, description="Star center")
    part: int = Field(default=1, ge=1, description="Part holding the fixed set (partite-threshold)")
    fixed: Optional[List[int]] = Field(default=None, description="Fixed (t-1)-set (partite-threshold)")
    sizes: Optional[List[int]] = Field(default=None, description="Target family sizes (random kinds)")
    partite_complete: bool = Field(default=False, description="complete kind: balanced k-partite instead of C([n], k)")
    seed: int = Field(default=0, ge=0)

    @model_validator(mode="after")
    def _check_kind_parameters(self) -> "ConstructionSpec":
        missing = [name for name in _REQUIRED[self.kind] if getattr(self, name) is None]
        if missing:
            raise ValueError(f"construction '{self.kind}' needs {', '.join(missing)}")
        if self.ks is not None and any(k < 1 for k in self.ks):
            raise ValueError(f"uniformities must be positive: {self.ks}")
        if self.sizes is not None:
            if any(s < 0 for s in self.sizes):
                raise ValueError(f"sizes must be nonnegative: {self.sizes}")
            if self.ks is not None and len(self.sizes) != len(self.ks):
                raise ValueError(f"need one size per uniformity (ks={self.ks}, sizes={self.sizes})")
        return self

    @property
    def copies(self) -> int:
        return self.t or 1
