"""
Solver Module
Exact rainbow matching search, matching number, brute-force oracle and the
extremal family explorer
"""

from .models import SolverConfig, Verdict, SolveOutcome, ExtremalResult
from .exact import find_rainbow, matching_number, RainbowSearch, MatchingBranchAndBound
from .oracle import brute_force_rainbow
from .extremal import extremal_search

__all__ = [
    "SolverConfig",
    "Verdict",
    "SolveOutcome",
    "ExtremalResult",
    "find_rainbow",
    "matching_number",
    "RainbowSearch",
    "MatchingBranchAndBound",
    "brute_force_rainbow",
    "extremal_search",
]
