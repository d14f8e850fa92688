"""
Exact rainbow matching search and matching number

Both searches work on integer bit masks of edges. A rainbow search node
fixes one edge for one family and forward-checks every unprocessed family:
if some family has no edge left that avoids the used vertices the branch is
cut before descending.
"""

import logging
import time
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..core.exceptions import MatchingBudgetExceeded
from ..core.hypergraph import Family, Hypergraph, RainbowMatching
from .models import SolveOutcome, SolverConfig, Verdict

logger = logging.getLogger(__name__)


class _NodeBudgetExhausted(Exception):
    pass


class RainbowSearch:
    """Backtracking over families with a used-vertex mask"""

    def __init__(self, F: Family, cfg: Optional[SolverConfig] = None):
        self.F = F
        self.cfg = cfg or SolverConfig()
        self.masks: List[Tuple[int, ...]] = [m.masks for m in F]
        self.nodes = 0
        self.pruned = 0
        rng = np.random.default_rng(self.cfg.seed)
        # Random tie-break rank per family, used by both size-based orders
        self._tiebreak = [int(x) for x in rng.permutation(F.t)]

    # ------------------------------------------------------------------
    # Ordering
    # ------------------------------------------------------------------

    def _static_order(self) -> List[int]:
        if self.cfg.order_heuristic == "input-order":
            return list(range(self.F.t))
        return sorted(range(self.F.t), key=lambda f: (len(self.masks[f]), self._tiebreak[f]))

    def _pick_family(self, remaining: List[int], alive: Dict[int, List[int]]) -> int:
        if self.cfg.order_heuristic == "min-degree-vertex":
            return min(remaining, key=lambda f: (len(alive[f]), self._tiebreak[f]))
        return remaining[0]

    def _edge_order(self, f: int, candidates: List[int], remaining: List[int], alive: Dict[int, List[int]]) -> List[int]:
        if self.cfg.order_heuristic != "min-degree-vertex":
            return candidates
        # Least constraining first: vertices with small degree in the families still to place
        vertex_load: Dict[int, int] = {}
        for g in remaining:
            if g == f:
                continue
            for eid in alive[g]:
                for v in self.F[g].edges[eid]:
                    vertex_load[v] = vertex_load.get(v, 0) + 1
        edges = self.F[f].edges
        return sorted(candidates, key=lambda eid: (sum(vertex_load.get(v, 0) for v in edges[eid]), eid))

    # ------------------------------------------------------------------
    # Search
    # ------------------------------------------------------------------

    def _tick(self) -> None:
        self.nodes += 1
        if self.cfg.node_budget is not None and self.nodes > self.cfg.node_budget:
            raise _NodeBudgetExhausted()

    def _search(self, remaining: List[int], alive: Dict[int, List[int]], chosen: Dict[int, int]) -> bool:
        self._tick()
        if not remaining:
            return True

        f = self._pick_family(remaining, alive)
        rest = [g for g in remaining if g != f]
        for eid in self._edge_order(f, alive[f], rest, alive):
            mask = self.masks[f][eid]
            next_alive: Dict[int, List[int]] = {}
            dead = False
            for g in rest:
                survivors = [x for x in alive[g] if not self.masks[g][x] & mask]
                if not survivors:
                    dead = True
                    break
                next_alive[g] = survivors
            if dead:
                self.pruned += 1
                continue
            chosen[f] = eid
            if self._search(rest, next_alive, chosen):
                return True
            del chosen[f]
        return False

    def run(self) -> SolveOutcome:
        started = time.perf_counter()
        order = self._static_order()
        alive = {f: list(range(len(self.masks[f]))) for f in range(self.F.t)}
        chosen: Dict[int, int] = {}

        if any(not alive[f] for f in order):
            verdict = Verdict.NO_MATCHING
        else:
            try:
                verdict = Verdict.MATCHING if self._search(order, alive, chosen) else Verdict.NO_MATCHING
            except _NodeBudgetExhausted:
                verdict = Verdict.BUDGET_EXCEEDED

        matching = None
        if verdict is Verdict.MATCHING:
            matching = RainbowMatching((f + 1, self.F[f].edges[eid]) for f, eid in chosen.items())

        millis = (time.perf_counter() - started) * 1000
        logger.debug(
            f"find_rainbow t={self.F.t} sizes={self.F.sizes} -> {verdict.value} "
            f"({self.nodes} nodes, {self.pruned} pruned, {millis:.1f} ms)"
        )
        return SolveOutcome(verdict, matching, self.nodes, self.pruned, millis)


def find_rainbow(F: Family, cfg: Optional[SolverConfig] = None) -> SolveOutcome:
    """Exact decision with witness; BudgetExceeded is an honest third verdict"""
    return RainbowSearch(F, cfg).run()


# ============================================================================
# Matching number
# ============================================================================

class MatchingBranchAndBound:
    """
    nu(H) by branching on a minimum-degree covered vertex v: either v is
    matched (one branch per edge through v) or v stays uncovered
    """

    def __init__(self, H: Hypergraph, cfg: Optional[SolverConfig] = None):
        self.H = H
        self.cfg = cfg or SolverConfig()
        self.masks = H.masks
        self.nodes = 0
        self.best = 0
        self.best_ids: Tuple[int, ...] = ()

    def _bound(self, alive: Sequence[int]) -> int:
        covered = 0
        for i in alive:
            covered |= self.masks[i]
        return min(len(alive), covered.bit_count() // max(self.H.k, 1))

    def _search(self, alive: List[int], picked: Tuple[int, ...]) -> None:
        self.nodes += 1
        if self.cfg.node_budget is not None and self.nodes > self.cfg.node_budget:
            raise _NodeBudgetExhausted()
        if len(picked) > self.best:
            self.best = len(picked)
            self.best_ids = picked
        if not alive or len(picked) + self._bound(alive) <= self.best:
            return

        degrees: Dict[int, int] = {}
        for i in alive:
            for v in self.H.edges[i]:
                degrees[v] = degrees.get(v, 0) + 1
        v = min(degrees, key=lambda u: (degrees[u], u))
        bit = 1 << v

        for i in alive:
            if self.masks[i] & bit:
                mask = self.masks[i]
                self._search([j for j in alive if not self.masks[j] & mask], picked + (i,))
        self._search([j for j in alive if not self.masks[j] & bit], picked)

    def run(self) -> int:
        if self.H.k == 0:
            return len(self.H)
        alive = list(range(len(self.H)))
        try:
            self._search(alive, ())
        except _NodeBudgetExhausted:
            raise MatchingBudgetExceeded(self.best, self._bound(alive), self.nodes) from None
        logger.debug(f"matching_number {self.H!r} = {self.best} ({self.nodes} nodes)")
        return self.best

    def witness(self) -> List[Tuple[int, ...]]:
        return [self.H.edges[i] for i in self.best_ids]


def matching_number(H: Hypergraph, cfg: Optional[SolverConfig] = None) -> int:
    """Exact nu(H); MatchingBudgetExceeded carries (lower, upper) when the budget runs out"""
    return MatchingBranchAndBound(H, cfg).run()
