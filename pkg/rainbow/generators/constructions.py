"""
Extremal and tight constructions

Every generator checks its exact size identity before returning, so a
construction that drifts from its closed form fails loudly.
"""

import logging
from itertools import combinations, product
from typing import Optional, Sequence

from ..core.exceptions import ParameterError
from ..core.hypergraph import Family, Hypergraph, PartiteStructure
from ..core.thresholds import binomial, threshold_cover, threshold_product

logger = logging.getLogger(__name__)


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise ParameterError(message)


def _checked(H: Hypergraph, expected: int, name: str) -> Hypergraph:
    if len(H) != expected:
        raise AssertionError(f"{name} produced {len(H)} edges, expected {expected}")
    return H


def gen_star(n: int, k: int, center: int = 1) -> Hypergraph:
    """All k-subsets of [n] through `center`; C(n-1, k-1) edges"""
    _require(1 <= k <= n, f"need 1 <= k <= n (got n={n}, k={k})")
    _require(1 <= center <= n, f"center {center} outside [1, {n}]")
    others = [v for v in range(1, n + 1) if v != center]
    edges = (combo + (center,) for combo in combinations(others, k - 1))
    return _checked(Hypergraph(n, k, edges), binomial(n - 1, k - 1), "gen_star")


def gen_cover(n: int, k: int, t: int) -> Hypergraph:
    """All k-subsets of [n] meeting {1, ..., t-1}; C(n, k) - C(n-t+1, k) edges"""
    _require(1 <= k <= n and t >= 1, f"need 1 <= k <= n and t >= 1 (got n={n}, k={k}, t={t})")
    _require(t - 1 <= n, f"fixed set of size {t - 1} does not fit in [1, {n}]")
    fixed = t - 1
    edges = (e for e in combinations(range(1, n + 1), k) if e[0] <= fixed)
    return _checked(Hypergraph(n, k, edges), threshold_cover(n, k, t), "gen_cover")


def gen_clique(n: int, k: int, t: int) -> Hypergraph:
    """All k-subsets of {1, ..., kt-1} inside a universe of size n"""
    _require(k >= 1 and t >= 1, f"need k, t >= 1 (got k={k}, t={t})")
    _require(k * t - 1 <= n, f"clique on {k * t - 1} vertices does not fit in [1, {n}]")
    edges = combinations(range(1, k * t), k)
    return _checked(Hypergraph(n, k, edges), binomial(k * t - 1, k), "gen_clique")


def gen_complete(n: int, k: int) -> Hypergraph:
    _require(0 <= k <= n, f"need 0 <= k <= n (got n={n}, k={k})")
    return _checked(Hypergraph.complete(n, k), binomial(n, k), "gen_complete")


def gen_complete_partite(n: int, k: int, parts: Optional[Sequence[int]] = None, part_count: Optional[int] = None) -> Hypergraph:
    """Every legal edge on the given parts of a (part_count x n) structure"""
    structure = PartiteStructure(part_count or k, n)
    parts = tuple(parts) if parts is not None else tuple(range(1, k + 1))
    _require(len(parts) == k and len(set(parts)) == k, f"need {k} distinct parts, got {list(parts)}")
    edges = product(*(structure.part_vertices(p) for p in parts))
    return _checked(Hypergraph(structure.universe_size, k, edges, structure), n**k, "gen_complete_partite")


def gen_partite_threshold(
    n: int,
    k: int,
    t: int,
    part: int = 1,
    fixed: Optional[Sequence[int]] = None,
) -> Hypergraph:
    """
    All edges of the balanced k-partite k-graph whose vertex in `part`
    lies in the (t-1)-set `fixed`; exactly (t-1) n^(k-1) edges
    """
    _require(k >= 1 and n >= 1 and t >= 1, f"need n, k, t >= 1 (got n={n}, k={k}, t={t})")
    structure = PartiteStructure(k, n)
    _require(1 <= part <= k, f"part {part} outside [1, {k}]")
    _require(t - 1 <= n, f"fixed set of size {t - 1} does not fit in a part of size {n}")
    if fixed is None:
        fixed = [structure.vertex(part, q) for q in range(1, t)]
    fixed = sorted(set(fixed))
    _require(len(fixed) == t - 1, f"fixed set must have t-1={t - 1} vertices, got {len(fixed)}")
    _require(
        all(1 <= v <= structure.universe_size and structure.part_of(v) == part for v in fixed),
        f"fixed set {fixed} must lie in part {part}",
    )
    choices = [fixed if p == part else structure.part_vertices(p) for p in range(1, k + 1)]
    edges = product(*choices)
    return _checked(
        Hypergraph(structure.universe_size, k, edges, structure),
        (t - 1) * n ** (k - 1),
        "gen_partite_threshold",
    )


def gen_theorem13_tight(n: int, ks: Sequence[int]) -> Family:
    """Stars at vertex 1 for k1, k2 and complete k_i-graphs for i >= 3"""
    ks = list(ks)
    _require(len(ks) >= 2, f"construction needs t >= 2 (got t={len(ks)})")
    _require(all(a >= b for a, b in zip(ks, ks[1:])), f"uniformities must be sorted descending: {ks}")
    _require(all(1 <= k <= n for k in ks), f"uniformities must lie in [1, {n}]: {ks}")
    members = [gen_star(n, ks[0], 1), gen_star(n, ks[1], 1)] + [gen_complete(n, k) for k in ks[2:]]
    family = Family(members)
    if family.size_product() != threshold_product(n, ks):
        raise AssertionError(f"gen_theorem13_tight product {family.size_product()} != threshold")
    logger.debug(f"theorem13-tight n={n} ks={ks} sizes={family.sizes}")
    return family
