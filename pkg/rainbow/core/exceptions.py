"""
Exception hierarchy

Verdicts (no matching, budget exceeded, sampler exhausted) are returned as
values. These exceptions are for caller errors and broken hypotheses.
"""

from typing import Optional


class RainbowError(Exception):
    """Base class for every error raised by the package"""


class ParameterError(RainbowError, ValueError):
    """Invalid parameters for a formula, generator or algorithm"""


class GuardViolation(RainbowError):
    """Parameters exceed a configured desk-scale guard"""


class FamilyFormatError(RainbowError):
    """Malformed family input; indices are 1-based"""

    def __init__(self, message: str, family_index: Optional[int] = None, edge_index: Optional[int] = None):
        self.family_index = family_index
        self.edge_index = edge_index
        location = []
        if family_index is not None:
            location.append(f"family {family_index}")
        if edge_index is not None:
            location.append(f"edge {edge_index}")
        prefix = f"{', '.join(location)}: " if location else ""
        super().__init__(f"{prefix}{message}")


class HypothesisViolated(RainbowError):
    """A constructive algorithm could not continue at (stage, step)"""

    def __init__(self, stage: str, step: Optional[int] = None, detail: str = ""):
        self.stage = stage
        self.step = step
        self.detail = detail
        where = stage if step is None else f"{stage} s={step}"
        super().__init__(f"hypothesis violated at {where}" + (f": {detail}" if detail else ""))


class MatchingBudgetExceeded(RainbowError):
    """Branch and bound ran out of nodes; nu lies in [lower, upper]"""

    def __init__(self, lower: int, upper: int, nodes: int):
        self.lower = lower
        self.upper = upper
        self.nodes = nodes
        super().__init__(f"node budget exhausted after {nodes} nodes: {lower} <= nu <= {upper}")
