"""
Pydantic models for the family file format

{"universe": N, "partite": {"k": K, "n": n} | null,
 "families": [{"k": k_i, "edges": [[v, ...], ...]}, ...]}
"""

from typing import List, Optional

from pydantic import BaseModel, Field


class PartiteDocument(BaseModel):
    """Part count and part size of the canonical labeling"""
    k: int = Field(..., ge=1, description="Number of parts")
    n: int = Field(..., ge=1, description="Vertices per part")


class MemberDocument(BaseModel):
    """One hypergraph F_i"""
    k: int = Field(..., ge=0, description="Uniformity k_i")
    edges: List[List[int]] = Field(default_factory=list, description="Edges as 1-based vertex lists")


class FamilyDocument(BaseModel):
    universe: int = Field(..., ge=0, description="Universe size N; vertices are 1..N")
    partite: Optional[PartiteDocument] = None
    families: List[MemberDocument] = Field(..., min_length=1)
