"""
Lexicographic ranking of k-subsets and partite tuples

Random families are drawn as ranks and unranked on demand, so a sample of a
few edges never materializes all C(n, k) of them.
"""

from math import comb
from typing import Dict, List, Sequence

import numpy as np

from ..core.exceptions import ParameterError
from ..core.hypergraph import Edge, PartiteStructure


def rank_subset(n: int, edge: Sequence[int]) -> int:
    """Position of a sorted k-subset of [n] in lexicographic order"""
    k = len(edge)
    rank = 0
    previous = 0
    for i, v in enumerate(edge):
        for x in range(previous + 1, v):
            rank += comb(n - x, k - i - 1)
        previous = v
    return rank


def unrank_subset(n: int, k: int, rank: int) -> Edge:
    total = comb(n, k)
    if not 0 <= rank < total:
        raise ParameterError(f"rank {rank} outside [0, {total})")
    edge = []
    x = 1
    for remaining in range(k, 0, -1):
        while True:
            block = comb(n - x, remaining - 1)
            if rank < block:
                break
            rank -= block
            x += 1
        edge.append(x)
        x += 1
    return tuple(edge)


def rank_partite(structure: PartiteStructure, parts: Sequence[int], edge: Sequence[int]) -> int:
    """Mixed-radix rank of a legal edge living on `parts` (first part most significant)"""
    by_part = {structure.part_of(v): v for v in edge}
    rank = 0
    for p in parts:
        q = (by_part[p] - p) // structure.k
        rank = rank * structure.n + q
    return rank


def unrank_partite(structure: PartiteStructure, parts: Sequence[int], rank: int) -> Edge:
    total = structure.n ** len(parts)
    if not 0 <= rank < total:
        raise ParameterError(f"rank {rank} outside [0, {total})")
    positions: List[int] = []
    for _ in parts:
        rank, q = divmod(rank, structure.n)
        positions.append(q)
    positions.reverse()
    return tuple(sorted(q * structure.k + p for p, q in zip(parts, positions)))


def sample_ranks(total: int, size: int, rng: np.random.Generator) -> List[int]:
    """
    `size` distinct ranks from [0, total) by a partial Fisher-Yates shuffle
    over a virtual array; only swapped slots are stored
    """
    if not 0 <= size <= total:
        raise ParameterError(f"cannot draw {size} distinct edges out of {total}")
    if total >= 2**63:
        raise ParameterError(f"edge space of {total} exceeds the sampler range")
    swapped: Dict[int, int] = {}
    ranks = []
    for i in range(size):
        j = int(rng.integers(i, total))
        ranks.append(swapped.get(j, j))
        swapped[j] = swapped.get(i, i)
    return ranks
