"""
Extremal family explorer

Local search over families F_i of k_i-subsets of [n] that admit no rainbow
matching, climbing on the product of sizes. Every state is checked with the
exact solver. Results are lower-bound witnesses only, never optimality
certificates.
"""

import logging
import math
from itertools import combinations
from typing import List, Optional, Sequence, Set, Tuple

import numpy as np

from ..core.exceptions import GuardViolation, ParameterError
from ..core.hypergraph import Edge, Family, Hypergraph
from ..generators.constructions import gen_complete, gen_star
from ..settings import get_settings
from .exact import find_rainbow
from .models import ExtremalResult, SolverConfig, Verdict

logger = logging.getLogger(__name__)


class _EvaluationBudgetExhausted(Exception):
    pass


class ExtremalSearch:
    """Hill-climb with sideways swaps and restarts, seeded for reproducibility"""

    def __init__(
        self,
        n: int,
        ks: Sequence[int],
        budget: int,
        seed: int,
        cfg: Optional[SolverConfig] = None,
        sideways: int = 20,
        max_restarts: int = 8,
    ):
        self.n = n
        self.ks = list(ks)
        self.t = len(self.ks)
        self.budget = budget
        self.rng = np.random.default_rng(seed)
        self.cfg = cfg or SolverConfig(seed=seed)
        self.sideways = sideways
        self.max_restarts = max_restarts
        self.evaluations = 0
        self.universe_edges: List[List[Edge]] = [list(combinations(range(1, n + 1), k)) for k in self.ks]

    # ------------------------------------------------------------------
    # Evaluation
    # ------------------------------------------------------------------

    def _family(self, state: Sequence[Set[Edge]]) -> Family:
        return Family([Hypergraph(self.n, k, edges) for k, edges in zip(self.ks, state)])

    def _admits(self, state: Sequence[Set[Edge]]) -> bool:
        self.evaluations += 1
        if self.evaluations > self.budget:
            raise _EvaluationBudgetExhausted()
        outcome = find_rainbow(self._family(state), self.cfg)
        return outcome.verdict is not Verdict.NO_MATCHING

    def _can_add(self, state: List[Set[Edge]], i: int, edge: Edge) -> bool:
        # A new matching must use the new edge, so pin F_i to it
        trial = list(state)
        trial[i] = {edge}
        return not self._admits(trial)

    # ------------------------------------------------------------------
    # Moves
    # ------------------------------------------------------------------

    def _climb(self, state: List[Set[Edge]]) -> None:
        """Apply feasible adds, best product gain first, ties uniformly at random"""
        while True:
            sizes = [len(s) for s in state]
            tiers = {}
            for i in range(self.t):
                gained = math.prod(sizes[:i] + [sizes[i] + 1] + sizes[i + 1:])
                for edge in self.universe_edges[i]:
                    if edge not in state[i]:
                        tiers.setdefault(gained, []).append((i, edge))
            added = False
            for gained in sorted(tiers, reverse=True):
                moves = tiers[gained]
                for j in self.rng.permutation(len(moves)):
                    i, edge = moves[int(j)]
                    if self._can_add(state, i, edge):
                        state[i].add(edge)
                        added = True
                        break
                if added:
                    break
            if not added:
                return

    def _swap(self, state: List[Set[Edge]]) -> bool:
        """One sideways move: replace an edge of some F_i by a non-member edge"""
        nonempty = [i for i in range(self.t) if state[i]]
        if not nonempty:
            return False
        i = nonempty[int(self.rng.integers(len(nonempty)))]
        members = sorted(state[i])
        out_edge = members[int(self.rng.integers(len(members)))]
        outside = [e for e in self.universe_edges[i] if e not in state[i]]
        if not outside:
            return False
        in_edge = outside[int(self.rng.integers(len(outside)))]
        state[i].discard(out_edge)
        if self._can_add(state, i, in_edge):
            state[i].add(in_edge)
            return True
        state[i].add(out_edge)
        return False

    def _warm_start(self) -> List[Set[Edge]]:
        """Stars at vertex 1 for the two largest uniformities, complete graphs elsewhere"""
        state: List[Set[Edge]] = [set() for _ in self.ks]
        if self.t < 2:
            return state
        order = sorted(range(self.t), key=lambda i: -self.ks[i])
        for rank, i in enumerate(order):
            H = gen_star(self.n, self.ks[i], 1) if rank < 2 else gen_complete(self.n, self.ks[i])
            state[i] = set(H.edges)
        return state

    # ------------------------------------------------------------------
    # Driver
    # ------------------------------------------------------------------

    def run(self) -> ExtremalResult:
        best_state: List[Set[Edge]] = [set() for _ in self.ks]
        best_key: Tuple[int, int] = (0, 0)
        history: List[int] = []
        restarts = 0
        exhausted = False

        def record(state: List[Set[Edge]]) -> None:
            nonlocal best_state, best_key
            sizes = [len(s) for s in state]
            key = (math.prod(sizes), sum(sizes))
            if key > best_key:
                best_key = key
                best_state = [set(s) for s in state]
                history.append(key[0])
                logger.debug(f"extremal_search new best product={key[0]} sizes={sizes}")

        try:
            while restarts <= self.max_restarts:
                state = self._warm_start() if restarts == 0 else [set() for _ in self.ks]
                record(state)
                self._climb(state)
                record(state)
                stale = 0
                while stale < self.sideways:
                    before = math.prod([len(s) for s in state])
                    if self._swap(state):
                        self._climb(state)
                        record(state)
                    stale = 0 if math.prod([len(s) for s in state]) > before else stale + 1
                restarts += 1
        except _EvaluationBudgetExhausted:
            exhausted = True
            logger.info(f"extremal_search budget of {self.budget} evaluations exhausted, returning best so far")

        family = self._family(best_state)
        verified = find_rainbow(family, self.cfg).verdict is Verdict.NO_MATCHING
        return ExtremalResult(
            family=family,
            product=family.size_product(),
            sizes=family.sizes,
            evaluations=min(self.evaluations, self.budget),
            restarts=restarts,
            budget_exhausted=exhausted,
            verified=verified,
            history=history,
        )


def extremal_search(
    n: int,
    ks: Sequence[int],
    t: Optional[int] = None,
    budget: int = 2000,
    seed: int = 0,
    cfg: Optional[SolverConfig] = None,
) -> ExtremalResult:
    """
    Best family without a rainbow matching found within `budget` solver
    evaluations. A single uniformity with t > 1 is repeated t times.
    """
    ks = list(ks)
    if t is not None and len(ks) == 1 and t > 1:
        ks = ks * t
    if t is not None and len(ks) != t:
        raise ParameterError(f"got {len(ks)} uniformities for t={t}")
    if not ks or any(not 1 <= k <= n for k in ks):
        raise ParameterError(f"uniformities must lie in [1, {n}]: {ks}")
    if budget < 1:
        raise ParameterError("budget must be positive")
    if seed < 0:
        raise ParameterError(f"seed must be nonnegative (got {seed})")

    settings = get_settings()
    if n > settings.extremal_max_n or max(ks) > settings.extremal_max_k or len(ks) > settings.extremal_max_t:
        raise GuardViolation(
            f"extremal_search is limited to n <= {settings.extremal_max_n}, k <= {settings.extremal_max_k}, "
            f"t <= {settings.extremal_max_t} (got n={n}, ks={ks})"
        )

    result = ExtremalSearch(n, ks, budget, seed, cfg).run()
    logger.info(
        f"extremal_search n={n} ks={ks}: best product {result.product} sizes={result.sizes} "
        f"after {result.evaluations} evaluations"
    )
    return result
