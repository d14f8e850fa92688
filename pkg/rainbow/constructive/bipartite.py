"""
Two-phase greedy for bipartite families

Phase 1 picks distinct vertices x_1..x_t, x_s of degree at least t-s+1 in
F_s - {x_1..x_{s-1}}. Phase 2 walks s = t..1 and picks an edge of F_s
through x_s that avoids x_1..x_{s-1} and every edge already picked. With
|F_s| > (t-1)n and n > t neither phase can get stuck.
"""

import logging
from typing import List, Optional, Tuple

from ..core.exceptions import HypothesisViolated, ParameterError
from ..core.hypergraph import Family, Hypergraph, RainbowMatching, edge_mask
from ..core.thresholds import threshold_partite
from .models import EdgeChoice, GreedyTrace, VertexChoice

logger = logging.getLogger(__name__)


def member_parts(H: Hypergraph) -> Optional[Tuple[int, ...]]:
    """The parts every edge of a partite member uses; None for an empty member"""
    if H.partite is None:
        raise ParameterError("constructive algorithms need a partite family")
    parts = {H.partite.parts_of(e) for e in H.edges}
    if len(parts) > 1:
        raise ParameterError(f"edges of one member use different parts: {sorted(parts)}")
    return parts.pop() if parts else None


def check_bipartite_hypothesis(F: Family) -> None:
    """Raise HypothesisViolated unless every F_i is bipartite with more than (t-1)n edges and n > t"""
    if F.partite is None:
        raise ParameterError("bipartite_greedy needs a partite family")
    n, t = F.partite.n, F.t
    if any(k != 2 for k in F.ks):
        raise ParameterError(f"bipartite_greedy needs 2-uniform members, got {F.ks}")
    if n <= t:
        raise HypothesisViolated("hypothesis", detail=f"part size n={n} must exceed t={t}")
    bound = threshold_partite(n, 2, t)
    for i, H in enumerate(F, start=1):
        member_parts(H)
        if len(H) <= bound:
            raise HypothesisViolated("hypothesis", detail=f"|F_{i}|={len(H)} does not exceed (t-1)n={bound}")


def bipartite_greedy(F: Family, check_hypothesis: bool = True) -> Tuple[RainbowMatching, GreedyTrace]:
    """Rainbow matching of a bipartite family plus the trace of both phases"""
    if check_hypothesis:
        check_bipartite_hypothesis(F)
    elif any(k != 2 for k in F.ks):
        raise ParameterError(f"bipartite_greedy needs 2-uniform members, got {F.ks}")

    t = F.t
    trace = GreedyTrace()

    # Phase 1: x_s of maximum degree in F_s - X_{s-1}
    chosen: List[int] = []
    for s in range(1, t + 1):
        residual = F[s - 1].avoiding(chosen)
        best = residual.max_degree_vertex()
        need = t - s + 1
        if best is None or best[1] < need:
            degree = best[1] if best else 0
            raise HypothesisViolated("vertex", s, f"max residual degree {degree} < {need}")
        vertex, degree = best
        chosen.append(vertex)
        trace.chosen_vertices.append(VertexChoice(step=s, vertex=vertex, residual_degree=degree))

    # Phase 2: lowest qualifying edge through x_s, s = t..1
    picks = {}
    used = 0
    for s in range(t, 0, -1):
        H = F[s - 1]
        blocked = edge_mask(chosen[: s - 1]) | used
        edge = None
        for eid in H.incident(chosen[s - 1]):
            if not H.masks[eid] & blocked:
                edge = H.edges[eid]
                break
        if edge is None:
            raise HypothesisViolated("edge", s, f"no edge of F_{s} through {chosen[s - 1]} avoids the picks")
        picks[s] = edge
        used |= H.masks[H.edge_id(edge)]
        trace.chosen_edges.append(EdgeChoice(step=s, edge=list(edge)))

    logger.debug(f"bipartite_greedy t={t}: vertices {chosen}")
    return RainbowMatching(picks.items()), trace


def verify_greedy_trace(F: Family, trace: GreedyTrace) -> List[str]:
    """Re-check every claim of a trace against F; returns the problems found"""
    problems: List[str] = []
    t = F.t
    vertices = [c.vertex for c in trace.chosen_vertices]
    if [c.step for c in trace.chosen_vertices] != list(range(1, t + 1)):
        return [f"vertex steps {[c.step for c in trace.chosen_vertices]} are not 1..{t}"]
    if [c.step for c in trace.chosen_edges] != list(range(t, 0, -1)):
        return [f"edge steps {[c.step for c in trace.chosen_edges]} are not {t}..1"]
    if len(set(vertices)) != t:
        problems.append(f"vertices {vertices} are not distinct")

    for choice in trace.chosen_vertices:
        s = choice.step
        actual = F[s - 1].avoiding(vertices[: s - 1]).vertex_degree(choice.vertex)
        if actual != choice.residual_degree:
            problems.append(f"step {s}: recorded degree {choice.residual_degree}, actual {actual}")
        if actual < t - s + 1:
            problems.append(f"step {s}: degree {actual} below {t - s + 1}")

    used = set()
    for choice in trace.chosen_edges:
        s = choice.step
        edge = tuple(sorted(choice.edge))
        if edge not in F[s - 1]:
            problems.append(f"step {s}: edge {list(edge)} is not in F_{s}")
        if vertices[s - 1] not in edge:
            problems.append(f"step {s}: edge {list(edge)} misses x_{s}={vertices[s - 1]}")
        if set(edge) & set(vertices[: s - 1]):
            problems.append(f"step {s}: edge {list(edge)} meets X_{s - 1}")
        if used & set(edge):
            problems.append(f"step {s}: edge {list(edge)} meets a later pick")
        used.update(edge)
    return problems
