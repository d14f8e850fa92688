"""
Partite recursion

Induction on t + r over r-partite families with |F_i| > (t-1) n^(r-1):
t = 1 takes any edge, r = 2 hands off to the bipartite greedy, and
otherwise one of three cases applies.

  LINK-RECURSE        every F_i has t vertices of degree > 2(t-1)n^(r-2);
                      pick distinct representatives and recurse on links
  EXTEND-DISJOINT     some F_t has fewer; recurse on F_1..F_{t-1} and, when
                      F_t has max degree <= (t-1)(r-1)n^(r-2), add any edge
                      of F_t missing the sub-matching
  HIGH-DEGREE-VERTEX  otherwise take x of larger degree, recurse on
                      F_i minus edges through x, extend through x

Sub-instances keep the input indices of their members, so a reindex is a
reordering recorded in the trace and the final matching is read back in
input order.
"""

import logging
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import networkx as nx

from ..core.exceptions import HypothesisViolated, ParameterError
from ..core.hypergraph import Edge, Family, Hypergraph, RainbowMatching, edge_mask
from ..core.thresholds import theorem12_regime, threshold_partite
from ..core.validation import validate_rainbow
from .bipartite import bipartite_greedy, member_parts, verify_greedy_trace
from .models import MatchingPick, RecursionEvent, RecursionTrace

logger = logging.getLogger(__name__)

Picks = Dict[int, Edge]


def _link_threshold(n: int, r: int, t: int) -> int:
    return 2 * (t - 1) * n ** (r - 2)


def _extend_threshold(n: int, r: int, t: int) -> int:
    return (t - 1) * (r - 1) * n ** (r - 2)


def _high_degree_vertices(H: Hypergraph, bound: int) -> List[int]:
    return [v for v in H.vertices() if H.vertex_degree(v) > bound]


def _picks_to_models(picks: Picks) -> List[MatchingPick]:
    return [MatchingPick(family=label, edge=list(edge)) for label, edge in sorted(picks.items())]


def distinct_representatives(candidates: Sequence[Sequence[int]]) -> Optional[List[int]]:
    """One distinct vertex per candidate list via Hopcroft-Karp; None if impossible"""
    G = nx.Graph()
    families = [("family", i) for i in range(len(candidates))]
    G.add_nodes_from(families, bipartite=0)
    for i, vertices in enumerate(candidates):
        for v in vertices:
            G.add_node(("vertex", v), bipartite=1)
            G.add_edge(("family", i), ("vertex", v))
    matching = nx.bipartite.hopcroft_karp_matching(G, top_nodes=families)
    if any(node not in matching for node in families):
        return None
    return [matching[node][1] for node in families]


def check_partite_hypothesis(F: Family) -> int:
    """Raise unless F meets the recursion's hypothesis; returns the common r"""
    if F.partite is None:
        raise ParameterError("partite_recursive needs a partite family")
    ks = set(F.ks)
    if len(ks) != 1:
        raise ParameterError(f"members must share one uniformity r, got {F.ks}")
    r = ks.pop()
    if r < 2:
        raise ParameterError(f"partite_recursive needs r >= 2, got r={r}")
    n, k, t = F.partite.n, F.partite.k, F.t
    if not theorem12_regime(n, k, t):
        raise HypothesisViolated("hypothesis", detail=f"n={n} is below 3(k-1)(t-1)={3 * (k - 1) * (t - 1)}")
    bound = threshold_partite(n, r, t)
    for i, H in enumerate(F, start=1):
        member_parts(H)
        if len(H) <= bound:
            raise HypothesisViolated("hypothesis", detail=f"|F_{i}|={len(H)} does not exceed (t-1)n^(r-1)={bound}")
    return r


class PartiteRecursion:
    """Runs the case analysis and records one RecursionEvent per node"""

    def __init__(self, n: int):
        self.n = n
        self.trace = RecursionTrace(n=n)

    def _event(self, depth: int, case: str, members: List[Hypergraph], labels: List[int], **fields) -> RecursionEvent:
        event = RecursionEvent(depth=depth, case=case, t=len(members), r=members[0].k, families=list(labels), **fields)
        self.trace.events.append(event)
        return event

    def solve(self, members: List[Hypergraph], labels: List[int], depth: int = 0) -> Picks:
        t, r, n = len(members), members[0].k, self.n

        if t == 1:
            event = self._event(depth, "BASE-T1", members, labels)
            if not members[0].edges:
                raise HypothesisViolated("BASE-T1", 1, f"F_{labels[0]} is empty")
            picks = {labels[0]: members[0].edges[0]}
            event.edge = list(members[0].edges[0])
            event.matching = _picks_to_models(picks)
            return picks

        if r == 2:
            event = self._event(depth, "BASE-BIPARTITE", members, labels)
            matching, greedy = bipartite_greedy(Family(members), check_hypothesis=False)
            picks = {labels[i - 1]: edge for i, edge in matching.picks}
            event.greedy = greedy
            event.matching = _picks_to_models(picks)
            return picks

        link_bound = _link_threshold(n, r, t)
        high = [_high_degree_vertices(H, link_bound) for H in members]
        counts = [len(h) for h in high]

        if all(c >= t for c in counts):
            representatives = distinct_representatives(high)
            if representatives is None:
                raise HypothesisViolated("LINK-RECURSE", t, "no distinct representatives")
            event = self._event(
                depth, "LINK-RECURSE", members, labels,
                vertices=representatives, threshold=link_bound, high_degree_counts=counts,
            )
            links = [
                H.link(x, avoid=[y for y in representatives if y != x])
                for H, x in zip(members, representatives)
            ]
            sub = self.solve(links, labels, depth + 1)
            picks = {
                label: tuple(sorted(sub[label] + (x,)))
                for label, x in zip(labels, representatives)
            }
            event.matching = _picks_to_models(picks)
            return picks

        # Move the first family with fewer than t high-degree vertices to position t
        moved = counts.index(next(c for c in counts if c < t))
        order = [i for i in range(t) if i != moved] + [moved]
        members = [members[i] for i in order]
        labels = [labels[i] for i in order]
        counts = [counts[i] for i in order]
        last = members[-1]

        extend_bound = _extend_threshold(n, r, t)
        top = last.max_degree_vertex()
        top_degree = top[1] if top else 0

        if top_degree <= extend_bound:
            event = self._event(
                depth, "EXTEND-DISJOINT", members, labels,
                reindexed=labels[-1], threshold=extend_bound, degree=top_degree, high_degree_counts=counts,
            )
            sub = self.solve(members[:-1], labels[:-1], depth + 1)
            blocked = edge_mask(v for e in sub.values() for v in e)
            edge = next((e for e, m in zip(last.edges, last.masks) if not m & blocked), None)
            if edge is None:
                raise HypothesisViolated("EXTEND-DISJOINT", t, f"every edge of F_{labels[-1]} meets the sub-matching")
        else:
            x = top[0]
            event = self._event(
                depth, "HIGH-DEGREE-VERTEX", members, labels,
                reindexed=labels[-1], vertex=x, threshold=extend_bound, degree=top_degree, high_degree_counts=counts,
            )
            sub = self.solve([H.without_vertex(x) for H in members[:-1]], labels[:-1], depth + 1)
            blocked = edge_mask(v for e in sub.values() for v in e)
            edge = next((last.edges[i] for i in last.incident(x) if not last.masks[i] & blocked), None)
            if edge is None:
                raise HypothesisViolated("HIGH-DEGREE-VERTEX", t, f"no edge of F_{labels[-1]} through {x} misses the sub-matching")

        picks = dict(sub)
        picks[labels[-1]] = edge
        event.edge = list(edge)
        event.matching = _picks_to_models(picks)
        return picks


def partite_recursive(F: Family, check_hypothesis: bool = True) -> Tuple[RainbowMatching, RecursionTrace]:
    """Rainbow matching of an r-partite family together with its recursion trace"""
    if check_hypothesis:
        check_partite_hypothesis(F)
    elif F.partite is None or len(set(F.ks)) != 1 or F.ks[0] < 2:
        raise ParameterError("partite_recursive needs a partite family of one uniformity r >= 2")

    runner = PartiteRecursion(F.partite.n)
    picks = runner.solve(list(F.members), list(range(1, F.t + 1)))
    matching = RainbowMatching(picks.items())
    result = validate_rainbow(F, matching)
    if not result:
        raise AssertionError(f"partite_recursive produced an invalid matching: {result.detail}")
    logger.debug(f"partite_recursive t={F.t} r={F.ks[0]}: cases {runner.trace.cases}")
    return matching, runner.trace


# ============================================================================
# Post-hoc trace check
# ============================================================================

class _TraceReplay:
    """Rebuilds each sub-instance from the recorded choices and re-checks it"""

    def __init__(self, n: int, events: Iterator[RecursionEvent]):
        self.n = n
        self.events = events
        self.problems: List[str] = []

    def _fail(self, event: RecursionEvent, message: str) -> None:
        self.problems.append(f"depth {event.depth} {event.case}: {message}")

    def _check_result(self, event: RecursionEvent, members: List[Hypergraph], labels: List[int], picks: Picks) -> None:
        if _picks_to_models(picks) != event.matching:
            self._fail(event, "recorded matching differs from the replayed one")
        position = {label: i for i, label in enumerate(labels, start=1)}
        local = RainbowMatching((position[label], edge) for label, edge in picks.items() if label in position)
        result = validate_rainbow(Family(members), local)
        if not result:
            self._fail(event, f"sub-matching invalid: {result.detail}")

    def replay(self, members: List[Hypergraph], labels: List[int], depth: int) -> Picks:
        event = next(self.events, None)
        if event is None:
            self.problems.append(f"trace ends before depth {depth}")
            return {}
        t, r = len(members), members[0].k
        if event.reindexed is not None and event.reindexed in labels:
            order = sorted(range(t), key=lambda i: labels[i] == event.reindexed)
            members = [members[i] for i in order]
            labels = [labels[i] for i in order]
        if event.depth != depth or event.families != labels or event.t != t or event.r != r:
            self._fail(event, f"expected depth {depth} families {labels} t={t} r={r}")
            return {}

        if event.case == "BASE-T1":
            picks = {labels[0]: tuple(sorted(event.edge or ()))}
            if t != 1:
                self._fail(event, f"t={t}")
        elif event.case == "BASE-BIPARTITE":
            if t < 2 or r != 2 or event.greedy is None:
                self._fail(event, f"t={t} r={r} without a greedy trace")
                return {}
            for problem in verify_greedy_trace(Family(members), event.greedy):
                self._fail(event, problem)
            picks = {labels[c.step - 1]: tuple(sorted(c.edge)) for c in event.greedy.chosen_edges}
        elif event.case == "LINK-RECURSE":
            picks = self._replay_link(event, members, labels, depth)
        else:
            picks = self._replay_extend(event, members, labels, depth)
        self._check_result(event, members, labels, picks)
        return picks

    def _replay_link(self, event: RecursionEvent, members: List[Hypergraph], labels: List[int], depth: int) -> Picks:
        t, r, n = len(members), members[0].k, self.n
        bound = _link_threshold(n, r, t)
        xs = event.vertices or []
        if t < 2 or r < 3 or len(xs) != t or len(set(xs)) != t or event.threshold != bound:
            self._fail(event, f"bad representatives {xs} or threshold {event.threshold} (expected {bound})")
            return {}
        for H, label in zip(members, labels):
            if len(_high_degree_vertices(H, bound)) < t:
                self._fail(event, f"F_{label} has fewer than {t} vertices of degree > {bound}")
        for H, x, label in zip(members, xs, labels):
            if H.vertex_degree(x) <= bound:
                self._fail(event, f"x={x} has degree {H.vertex_degree(x)} <= {bound} in F_{label}")
        links = [H.link(x, avoid=[y for y in xs if y != x]) for H, x in zip(members, xs)]
        sub = self.replay(links, labels, depth + 1)
        return {label: tuple(sorted(sub.get(label, ()) + (x,))) for label, x in zip(labels, xs)}

    def _replay_extend(self, event: RecursionEvent, members: List[Hypergraph], labels: List[int], depth: int) -> Picks:
        t, r, n = len(members), members[0].k, self.n
        link_bound = _link_threshold(n, r, t)
        extend_bound = _extend_threshold(n, r, t)
        if t < 2 or r < 3 or event.reindexed != labels[-1] or event.threshold != extend_bound:
            self._fail(event, f"reindexed {event.reindexed} / threshold {event.threshold} inconsistent")
            return {}
        last = members[-1]
        if len(_high_degree_vertices(last, link_bound)) >= t:
            self._fail(event, f"F_{labels[-1]} has at least {t} vertices of degree > {link_bound}")
        top = last.max_degree_vertex()
        top_degree = top[1] if top else 0

        if event.case == "EXTEND-DISJOINT":
            if top_degree > extend_bound:
                self._fail(event, f"max degree {top_degree} exceeds {extend_bound}")
            sub = self.replay(members[:-1], labels[:-1], depth + 1)
        else:
            x = event.vertex
            if x is None or last.vertex_degree(x) <= extend_bound:
                self._fail(event, f"vertex {x} does not exceed degree {extend_bound}")
                return {}
            sub = self.replay([H.without_vertex(x) for H in members[:-1]], labels[:-1], depth + 1)
            if event.edge is None or x not in event.edge:
                self._fail(event, f"added edge {event.edge} misses x={x}")

        picks = dict(sub)
        picks[labels[-1]] = tuple(sorted(event.edge or ()))
        return picks


def verify_recursion_trace(F: Family, trace: RecursionTrace) -> List[str]:
    """Replay a trace against F and re-check every case precondition; returns the problems found"""
    if F.partite is None or F.partite.n != trace.n:
        return [f"trace was recorded for part size {trace.n}"]
    events = iter(trace.events)
    replay = _TraceReplay(trace.n, events)
    replay.replay(list(F.members), list(range(1, F.t + 1)), 0)
    if next(events, None) is not None:
        replay.problems.append("trace has events beyond the recursion")
    return replay.problems
