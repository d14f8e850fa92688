"""
Brute-force oracle

Walks F_1 x ... x F_t in product order with plain vertex sets and returns
the first pairwise-disjoint tuple. Shares nothing with the exact search so
the two can be cross-checked. A prefix that already overlaps is skipped as
a whole, since no completion of it can be disjoint.
"""

from typing import List, Optional, Set

from ..core.exceptions import GuardViolation
from ..core.hypergraph import Edge, Family, RainbowMatching
from ..settings import get_settings


def brute_force_rainbow(F: Family, limit: Optional[int] = None) -> Optional[RainbowMatching]:
    """First disjoint tuple in product order, or None for NoMatching"""
    limit = get_settings().brute_force_limit if limit is None else limit
    product = F.size_product()
    if product > limit:
        raise GuardViolation(f"product of family sizes {product} exceeds the oracle limit {limit}")
    if product == 0:
        return None

    members: List[List[Edge]] = [list(m.edges) for m in F]
    picked: List[Edge] = []
    used: Set[int] = set()

    def walk(depth: int) -> bool:
        if depth == len(members):
            return True
        for edge in members[depth]:
            if used.isdisjoint(edge):
                picked.append(edge)
                used.update(edge)
                if walk(depth + 1):
                    return True
                used.difference_update(edge)
                picked.pop()
        return False

    if walk(0):
        return RainbowMatching.from_edges(picked)
    return None
