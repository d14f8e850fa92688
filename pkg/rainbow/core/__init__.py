"""
Core Module
Domain types, degree queries, matching validation and threshold formulas
"""

from .exceptions import (
    RainbowError,
    ParameterError,
    FamilyFormatError,
    HypothesisViolated,
    GuardViolation,
    MatchingBudgetExceeded,
)
from .hypergraph import Edge, PartiteStructure, Hypergraph, Family, RainbowMatching, make_edge
from .degrees import degree, min_l_degree
from .validation import ValidationResult, validate_rainbow
from .thresholds import (
    binomial,
    threshold_partite,
    threshold_erdos,
    threshold_product,
    threshold_cover,
    threshold_question16,
    threshold_corollary26,
    threshold_matsumoto_tokushige,
    theorem12_regime,
    theorem13_regime,
    theorem14_regime,
)
from .family_io import load_family, dump_family, parse_family, family_to_document

__all__ = [
    "RainbowError",
    "ParameterError",
    "FamilyFormatError",
    "HypothesisViolated",
    "GuardViolation",
    "MatchingBudgetExceeded",
    "Edge",
    "PartiteStructure",
    "Hypergraph",
    "Family",
    "RainbowMatching",
    "make_edge",
    "degree",
    "min_l_degree",
    "ValidationResult",
    "validate_rainbow",
    "binomial",
    "threshold_partite",
    "threshold_erdos",
    "threshold_product",
    "threshold_cover",
    "threshold_question16",
    "threshold_corollary26",
    "threshold_matsumoto_tokushige",
    "theorem12_regime",
    "theorem13_regime",
    "theorem14_regime",
    "load_family",
    "dump_family",
    "parse_family",
    "family_to_document",
]
