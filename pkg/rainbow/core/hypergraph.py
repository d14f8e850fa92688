"""
Hypergraph domain types

Vertices are 1-based ids in [N]. Edges are canonicalized to sorted tuples and
kept in lexicographic order, so every iteration over a hypergraph is
deterministic. Each edge also carries a bit mask (bit v set for vertex v);
disjointness tests are a single integer AND.
"""

from dataclasses import dataclass
from itertools import combinations
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from .exceptions import ParameterError

Edge = Tuple[int, ...]


def make_edge(vertices: Iterable[int]) -> Edge:
    """Canonical sorted edge; repeated vertices are an error"""
    edge = tuple(sorted(int(v) for v in vertices))
    if len(set(edge)) != len(edge):
        raise ParameterError(f"edge {list(edge)} repeats a vertex")
    return edge


def edge_mask(edge: Iterable[int]) -> int:
    mask = 0
    for v in edge:
        mask |= 1 << v
    return mask


@dataclass(frozen=True)
class PartiteStructure:
    """
    k parts of n vertices each, canonical labeling:
    vertex (q-1)*k + p lies in part p for p in [k], q in [n]
    """
    k: int
    n: int

    def __post_init__(self):
        if self.k < 1 or self.n < 1:
            raise ParameterError(f"partite structure needs k >= 1 and n >= 1 (got k={self.k}, n={self.n})")

    @property
    def universe_size(self) -> int:
        return self.k * self.n

    def part_of(self, vertex: int) -> int:
        if not 1 <= vertex <= self.universe_size:
            raise ParameterError(f"vertex {vertex} outside [1, {self.universe_size}]")
        return (vertex - 1) % self.k + 1

    def vertex(self, part: int, position: int) -> int:
        """The position-th vertex (1-based) of a part"""
        return (position - 1) * self.k + part

    def part_vertices(self, part: int) -> Tuple[int, ...]:
        if not 1 <= part <= self.k:
            raise ParameterError(f"part {part} outside [1, {self.k}]")
        return tuple(self.vertex(part, q) for q in range(1, self.n + 1))

    def parts_of(self, vertices: Iterable[int]) -> Tuple[int, ...]:
        return tuple(sorted(self.part_of(v) for v in vertices))

    def is_legal(self, vertices: Iterable[int]) -> bool:
        parts = [self.part_of(v) for v in vertices]
        return len(parts) == len(set(parts))

    def to_dict(self) -> Dict:
        return {"k": self.k, "n": self.n}


def canonical_edge(
    vertices: Iterable[int],
    k: int,
    universe_size: int,
    partite: Optional[PartiteStructure] = None,
) -> Edge:
    """Validate one edge against uniformity, universe and legality"""
    edge = make_edge(vertices)
    if len(edge) != k:
        raise ParameterError(f"edge {list(edge)} has {len(edge)} vertices, expected {k}")
    if edge and (edge[0] < 1 or edge[-1] > universe_size):
        raise ParameterError(f"edge {list(edge)} leaves the universe [1, {universe_size}]")
    if partite is not None and not partite.is_legal(edge):
        raise ParameterError(f"edge {list(edge)} is not legal (two vertices in one part)")
    return edge


class Hypergraph:
    """
    Immutable k-uniform hypergraph over [universe_size]

    When `partite` is set every edge is legal. For k == partite.k this is the
    "exactly one vertex per part" condition; for k < partite.k edges live in
    k of the parts.
    """

    __slots__ = ("universe_size", "k", "partite", "edges", "masks", "_ids", "_incidence")

    def __init__(
        self,
        universe_size: int,
        k: int,
        edges: Iterable[Iterable[int]] = (),
        partite: Optional[PartiteStructure] = None,
    ):
        if universe_size < 0 or k < 0:
            raise ParameterError(f"invalid hypergraph shape (universe={universe_size}, k={k})")
        if partite is not None and partite.universe_size != universe_size:
            raise ParameterError(
                f"partite structure covers {partite.universe_size} vertices, universe has {universe_size}"
            )
        if partite is not None and k > partite.k:
            raise ParameterError(f"{k}-uniform edges cannot be legal in {partite.k} parts")

        seen = set()
        for index, raw in enumerate(edges, start=1):
            try:
                edge = canonical_edge(raw, k, universe_size, partite)
            except ParameterError as e:
                raise ParameterError(f"edge {index}: {e}") from None
            if edge in seen:
                raise ParameterError(f"edge {index}: duplicate edge {list(edge)}")
            seen.add(edge)

        self.universe_size = universe_size
        self.k = k
        self.partite = partite
        self.edges: Tuple[Edge, ...] = tuple(sorted(seen))
        self.masks: Tuple[int, ...] = tuple(edge_mask(e) for e in self.edges)
        self._ids: Dict[Edge, int] = {e: i for i, e in enumerate(self.edges)}

        # Inverted index: vertex -> ids of incident edges
        incidence: Dict[int, List[int]] = {}
        for i, e in enumerate(self.edges):
            for v in e:
                incidence.setdefault(v, []).append(i)
        self._incidence: Dict[int, Tuple[int, ...]] = {v: tuple(ids) for v, ids in incidence.items()}

    # ------------------------------------------------------------------
    # Basic queries
    # ------------------------------------------------------------------

    def __len__(self) -> int:
        return len(self.edges)

    def __iter__(self) -> Iterator[Edge]:
        return iter(self.edges)

    def __contains__(self, edge) -> bool:
        return tuple(sorted(edge)) in self._ids

    def __eq__(self, other) -> bool:
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return (
            self.universe_size == other.universe_size
            and self.k == other.k
            and self.partite == other.partite
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.universe_size, self.k, self.partite, self.edges))

    def __repr__(self) -> str:
        kind = f", partite={self.partite.k}x{self.partite.n}" if self.partite else ""
        return f"Hypergraph(universe={self.universe_size}, k={self.k}, edges={len(self.edges)}{kind})"

    def edge_id(self, edge: Sequence[int]) -> Optional[int]:
        return self._ids.get(tuple(sorted(edge)))

    def incident(self, vertex: int) -> Tuple[int, ...]:
        """Edge ids through a vertex"""
        return self._incidence.get(vertex, ())

    def vertex_degree(self, vertex: int) -> int:
        return len(self._incidence.get(vertex, ()))

    def vertices(self) -> Tuple[int, ...]:
        """V(H): vertices covered by at least one edge"""
        return tuple(sorted(self._incidence))

    def max_degree_vertex(self, exclude: Iterable[int] = ()) -> Optional[Tuple[int, int]]:
        """(vertex, degree) of maximum degree, lowest id on ties"""
        skip = set(exclude)
        best: Optional[Tuple[int, int]] = None
        for v in sorted(self._incidence):
            if v in skip:
                continue
            d = len(self._incidence[v])
            if best is None or d > best[1]:
                best = (v, d)
        return best

    # ------------------------------------------------------------------
    # Derived hypergraphs
    # ------------------------------------------------------------------

    def _derive(self, k: int, edges: Iterable[Edge]) -> "Hypergraph":
        return Hypergraph(self.universe_size, k, edges, self.partite)

    def avoiding(self, vertices: Iterable[int]) -> "Hypergraph":
        """H - X: edges disjoint from the given vertices"""
        blocked = edge_mask(vertices)
        return self._derive(self.k, (e for e, m in zip(self.edges, self.masks) if not m & blocked))

    def without_vertex(self, vertex: int) -> "Hypergraph":
        return self.avoiding((vertex,))

    def link(self, vertex: int, avoid: Iterable[int] = ()) -> "Hypergraph":
        """(k-1)-sets S with S + vertex an edge and S disjoint from `avoid`"""
        if self.k < 2:
            raise ParameterError("link of a hypergraph needs k >= 2")
        blocked = edge_mask(avoid)
        link_edges = []
        for i in self.incident(vertex):
            if self.masks[i] & blocked:
                continue
            link_edges.append(tuple(v for v in self.edges[i] if v != vertex))
        return self._derive(self.k - 1, link_edges)

    def with_edges(self, extra: Iterable[Iterable[int]]) -> "Hypergraph":
        return self._derive(self.k, list(self.edges) + [tuple(e) for e in extra])

    # ------------------------------------------------------------------
    # Serialization
    # ------------------------------------------------------------------

    def to_dict(self) -> Dict:
        return {"k": self.k, "edges": [list(e) for e in self.edges]}

    @classmethod
    def complete(cls, n: int, k: int) -> "Hypergraph":
        return cls(n, k, combinations(range(1, n + 1), k))


class Family:
    """
    Ordered family F_1..F_t over one universe

    Members may have different uniformities. If any member is partite, all of
    them share the same partite structure.
    """

    __slots__ = ("members", "universe_size", "partite")

    def __init__(self, members: Sequence[Hypergraph]):
        members = tuple(members)
        if not members:
            raise ParameterError("a family needs at least one member (t >= 1)")
        universes = {m.universe_size for m in members}
        if len(universes) != 1:
            raise ParameterError(f"family members use different universes: {sorted(universes)}")
        structures = {m.partite for m in members}
        if len(structures) != 1:
            raise ParameterError("family members disagree on the partite structure")
        self.members: Tuple[Hypergraph, ...] = members
        self.universe_size: int = members[0].universe_size
        self.partite: Optional[PartiteStructure] = members[0].partite

    @property
    def t(self) -> int:
        return len(self.members)

    @property
    def sizes(self) -> List[int]:
        return [len(m) for m in self.members]

    @property
    def ks(self) -> List[int]:
        return [m.k for m in self.members]

    def size_product(self) -> int:
        product = 1
        for m in self.members:
            product *= len(m)
        return product

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[Hypergraph]:
        return iter(self.members)

    def __getitem__(self, index: int) -> Hypergraph:
        return self.members[index]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Family):
            return NotImplemented
        return self.members == other.members

    def __hash__(self) -> int:
        return hash(self.members)

    def __repr__(self) -> str:
        return f"Family(t={self.t}, universe={self.universe_size}, sizes={self.sizes})"

    def subfamily(self, indices: Sequence[int]) -> "Family":
        """Members at the given 1-based indices, in that order"""
        return Family([self.members[i - 1] for i in indices])

    def to_dict(self) -> Dict:
        return {
            "universe": self.universe_size,
            "partite": self.partite.to_dict() if self.partite else None,
            "families": [m.to_dict() for m in self.members],
        }


class RainbowMatching:
    """Picks (i, e_i) with 1-based family indices, kept in index order"""

    __slots__ = ("picks",)

    def __init__(self, picks: Iterable[Tuple[int, Iterable[int]]]):
        self.picks: Tuple[Tuple[int, Edge], ...] = tuple(
            sorted(((int(i), tuple(sorted(int(v) for v in e))) for i, e in picks), key=lambda p: p[0])
        )

    @classmethod
    def from_edges(cls, edges: Sequence[Iterable[int]]) -> "RainbowMatching":
        """Edge j (0-based) picked from family j+1"""
        return cls((i, e) for i, e in enumerate(edges, start=1))

    @property
    def edges(self) -> List[Edge]:
        return [e for _, e in self.picks]

    def vertices(self) -> Tuple[int, ...]:
        return tuple(sorted(v for _, e in self.picks for v in e))

    def __len__(self) -> int:
        return len(self.picks)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RainbowMatching):
            return NotImplemented
        return self.picks == other.picks

    def __hash__(self) -> int:
        return hash(self.picks)

    def __repr__(self) -> str:
        return f"RainbowMatching({[(i, list(e)) for i, e in self.picks]})"

    def to_dict(self) -> List[Dict]:
        return [{"family": i, "edge": list(e)} for i, e in self.picks]

    @classmethod
    def from_dict(cls, data: Sequence[Dict]) -> "RainbowMatching":
        return cls((item["family"], item["edge"]) for item in data)
