"""
Constructive Module
Two-phase bipartite greedy, partite recursion and the permutation sampler
"""

from .models import (
    GreedyTrace,
    VertexChoice,
    EdgeChoice,
    RecursionEvent,
    RecursionTrace,
    MatchingPick,
    CertifyOutcome,
)
from .bipartite import bipartite_greedy, verify_greedy_trace, check_bipartite_hypothesis
from .recursive import partite_recursive, verify_recursion_trace, check_partite_hypothesis, distinct_representatives
from .sampler import random_permutation_certify, indicator_sums, expected_indicator_sum, sample_blocks

__all__ = [
    "GreedyTrace",
    "VertexChoice",
    "EdgeChoice",
    "RecursionEvent",
    "RecursionTrace",
    "MatchingPick",
    "CertifyOutcome",
    "bipartite_greedy",
    "verify_greedy_trace",
    "check_bipartite_hypothesis",
    "partite_recursive",
    "verify_recursion_trace",
    "check_partite_hypothesis",
    "distinct_representatives",
    "random_permutation_certify",
    "indicator_sums",
    "expected_indicator_sum",
    "sample_blocks",
]
