"""
Generators Module
Tight constructions and random family samplers
"""

from ..core.hypergraph import Family
from .constructions import (
    gen_star,
    gen_cover,
    gen_clique,
    gen_complete,
    gen_complete_partite,
    gen_partite_threshold,
    gen_theorem13_tight,
)
from .models import ConstructionSpec
from .sampling import gen_random_family, add_random_edge, make_rng


def build_construction(spec: ConstructionSpec) -> Family:
    """
    Dispatch a ConstructionSpec. Single-hypergraph kinds are emitted as a
    family of `spec.copies` identical members.
    """
    if spec.kind == "theorem13-tight":
        return gen_theorem13_tight(spec.n, spec.ks)
    if spec.kind == "random-uniform":
        return gen_random_family(spec.n, spec.ks, spec.sizes, partite=False, seed=spec.seed)
    if spec.kind == "random-partite":
        return gen_random_family(spec.n, spec.ks, spec.sizes, partite=True, seed=spec.seed)

    if spec.kind == "star":
        H = gen_star(spec.n, spec.k, spec.center)
    elif spec.kind == "cover":
        H = gen_cover(spec.n, spec.k, spec.t)
    elif spec.kind == "clique":
        H = gen_clique(spec.n, spec.k, spec.t)
    elif spec.kind == "partite-threshold":
        H = gen_partite_threshold(spec.n, spec.k, spec.t, spec.part, spec.fixed)
    elif spec.partite_complete:
        H = gen_complete_partite(spec.n, spec.k)
    else:
        H = gen_complete(spec.n, spec.k)
    return Family([H] * spec.copies)


__all__ = [
    "ConstructionSpec",
    "build_construction",
    "gen_star",
    "gen_cover",
    "gen_clique",
    "gen_complete",
    "gen_complete_partite",
    "gen_partite_threshold",
    "gen_theorem13_tight",
    "gen_random_family",
    "add_random_edge",
    "make_rng",
]
