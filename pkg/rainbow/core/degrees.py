"""
Degree queries

d_H(T) counts the edges containing T. The query starts from the shortest
incidence list among the vertices of T and filters it by mask, so
single-vertex degrees are a dictionary lookup.
"""

from itertools import combinations, product
from typing import Iterable, Iterator, Tuple

from .exceptions import ParameterError
from .hypergraph import Hypergraph, edge_mask


def degree(H: Hypergraph, T: Iterable[int]) -> int:
    """d_H(T); 0 for sets that are illegal in a partite hypergraph"""
    vertices = sorted(set(int(v) for v in T))
    for v in vertices:
        if not 1 <= v <= H.universe_size:
            raise ParameterError(f"vertex {v} outside universe [1, {H.universe_size}]")
    if not vertices:
        return len(H)
    if H.partite is not None and not H.partite.is_legal(vertices):
        return 0
    if len(vertices) == 1:
        return H.vertex_degree(vertices[0])

    shortest = min((H.incident(v) for v in vertices), key=len)
    tmask = edge_mask(vertices)
    return sum(1 for i in shortest if H.masks[i] & tmask == tmask)


def _candidate_sets(H: Hypergraph, l: int) -> Iterator[Tuple[int, ...]]:
    """All l-sets of the universe, or only the legal ones when partite"""
    if H.partite is None:
        yield from combinations(range(1, H.universe_size + 1), l)
        return
    structure = H.partite
    for parts in combinations(range(1, structure.k + 1), l):
        for choice in product(*(structure.part_vertices(p) for p in parts)):
            yield tuple(sorted(choice))


def min_l_degree(H: Hypergraph, l: int) -> int:
    """delta_l(H), ranging over legal l-sets for partite hypergraphs"""
    if not 0 <= l <= H.k:
        raise ParameterError(f"l={l} outside [0, {H.k}]")
    if l == 0:
        return len(H)
    if H.partite is not None and l > H.partite.k:
        raise ParameterError(f"no legal {l}-sets in {H.partite.k} parts")

    best = None
    for T in _candidate_sets(H, l):
        d = degree(H, T)
        if best is None or d < best:
            best = d
            if best == 0:
                break
    return best if best is not None else 0
