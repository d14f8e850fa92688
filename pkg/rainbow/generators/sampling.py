"""
Random family samplers

Uniform sampling without replacement over ranked edges, reproducible from
the seed (an int or a numpy SeedSequence).
"""

import logging
from functools import partial
from math import comb
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np

from ..core.exceptions import ParameterError
from ..core.hypergraph import Family, Hypergraph, PartiteStructure
from .ranking import sample_ranks, unrank_partite, unrank_subset

logger = logging.getLogger(__name__)

SeedLike = Union[int, Sequence[int], np.random.SeedSequence, np.random.Generator]


def make_rng(seed: SeedLike) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    if isinstance(seed, int) and seed < 0:
        raise ParameterError(f"seed must be nonnegative (got {seed})")
    return np.random.default_rng(seed)


def _default_parts(ks: Sequence[int]) -> List[Tuple[int, ...]]:
    return [tuple(range(1, k + 1)) for k in ks]


def gen_random_family(
    n: int,
    ks: Sequence[int],
    sizes: Sequence[int],
    partite: bool = False,
    seed: SeedLike = 0,
    parts: Optional[Sequence[Sequence[int]]] = None,
    part_count: Optional[int] = None,
) -> Family:
    """
    One uniform sample of sizes[i] distinct k_i-edges per family

    Non-partite families live on [n]. Partite families live in a
    (part_count x n) structure, family i on `parts[i]` (default: its first
    k_i parts); n is then the part size.
    """
    ks = list(ks)
    sizes = list(sizes)
    if len(ks) != len(sizes) or not ks:
        raise ParameterError(f"need one size per uniformity (ks={ks}, sizes={sizes})")
    rng = make_rng(seed)

    members = []
    if not partite:
        for k, size in zip(ks, sizes):
            if not 0 <= k <= n:
                raise ParameterError(f"uniformity {k} outside [0, {n}]")
            ranks = sample_ranks(comb(n, k), size, rng)
            members.append(Hypergraph(n, k, (unrank_subset(n, k, r) for r in ranks)))
        return Family(members)

    structure = PartiteStructure(part_count or max(ks), n)
    chosen_parts = [tuple(p) for p in parts] if parts is not None else _default_parts(ks)
    if len(chosen_parts) != len(ks):
        raise ParameterError(f"need one part tuple per family (got {len(chosen_parts)} for t={len(ks)})")
    for k, size, family_parts in zip(ks, sizes, chosen_parts):
        if len(family_parts) != k or len(set(family_parts)) != k or not all(1 <= p <= structure.k for p in family_parts):
            raise ParameterError(f"family of uniformity {k} needs {k} distinct parts in [1, {structure.k}], got {list(family_parts)}")
        ranks = sample_ranks(n**k, size, rng)
        edges = (unrank_partite(structure, family_parts, r) for r in ranks)
        members.append(Hypergraph(structure.universe_size, k, edges, structure))
    return Family(members)


def add_random_edge(H: Hypergraph, seed: SeedLike, parts: Optional[Sequence[int]] = None) -> Hypergraph:
    """H plus one uniformly random edge that is not already present"""
    rng = make_rng(seed)
    if H.partite is not None:
        family_parts = tuple(parts) if parts is not None else tuple(range(1, H.k + 1))
        total = H.partite.n ** H.k
        unrank = partial(unrank_partite, H.partite, family_parts)
    else:
        total = comb(H.universe_size, H.k)
        unrank = partial(unrank_subset, H.universe_size, H.k)
    if len(H) >= total:
        raise ParameterError("hypergraph is already complete")

    # Rejection on ranks; families here are far from complete
    while True:
        edge = unrank(int(rng.integers(0, total)))
        if edge not in H:
            return H.with_edges([edge])
