"""
Randomized permutation certifier

Each trial draws one uniform permutation per part, which together form a
uniform part-preserving permutation pi of the (k x n) structure. Block i is
pi applied to the i-th position of every part, so blocks are legal and
pairwise disjoint. X_i = 1 when block i is an edge of F_i, and the expected
number of successes is sum |F_i| / n^k.
"""

import logging
from typing import List, Optional

import numpy as np

from ..core.exceptions import ParameterError
from ..core.hypergraph import Edge, Family, PartiteStructure, RainbowMatching
from ..core.thresholds import threshold_partite
from ..settings import get_settings
from .models import CertifyOutcome

logger = logging.getLogger(__name__)


def _check_family(F: Family) -> PartiteStructure:
    structure = F.partite
    if structure is None:
        raise ParameterError("the permutation sampler needs a partite family")
    if any(k != structure.k for k in F.ks):
        raise ParameterError(f"members must be {structure.k}-partite {structure.k}-graphs, got uniformities {F.ks}")
    if F.t > structure.n:
        raise ParameterError(f"at most n={structure.n} families fit the blocks, got {F.t}")
    return structure


def sample_blocks(structure: PartiteStructure, count: int, rng: np.random.Generator) -> List[Edge]:
    """Blocks 1..count of one uniform part-preserving permutation"""
    k, n = structure.k, structure.n
    perms = [rng.permutation(n) for _ in range(k)]
    for perm in perms:
        if not np.array_equal(np.sort(perm), np.arange(n)):
            raise AssertionError("sampled map does not preserve its part")
    # position q of part p maps to position perm[q] of the same part
    blocks = [
        tuple(sorted(int(perms[p - 1][i]) * k + p for p in range(1, k + 1)))
        for i in range(count)
    ]
    seen = set()
    for block in blocks:
        if seen.intersection(block):
            raise AssertionError(f"block {list(block)} overlaps an earlier block")
        seen.update(block)
    return blocks


def _check_seed(seed: int) -> None:
    if seed < 0:
        raise ParameterError(f"seed must be nonnegative (got {seed})")


def _trial_rng(seed: int, trial: int) -> np.random.Generator:
    return np.random.default_rng([seed, trial])


def random_permutation_certify(
    F: Family,
    t: int,
    max_trials: Optional[int] = None,
    seed: int = 0,
) -> CertifyOutcome:
    """
    Find t families among F_1..F_m (m <= n) with a rainbow matching by
    sampling part-preserving permutations. Trial j uses the generator seeded
    with (seed, j), so any trial can be reproduced alone.
    """
    structure = _check_family(F)
    if not 1 <= t <= F.t:
        raise ParameterError(f"need 1 <= t <= {F.t} families (got t={t})")
    if max_trials is None:
        max_trials = get_settings().sampler_trial_factor * t
    if max_trials < 1:
        raise ParameterError("max_trials must be positive")
    _check_seed(seed)

    bound = threshold_partite(structure.n, structure.k, t)
    small = [i for i, size in enumerate(F.sizes, start=1) if size <= bound]
    if small:
        logger.warning(f"families {small} have at most (t-1)n^(k-1)={bound} edges; success is not guaranteed")

    for trial in range(max_trials):
        blocks = sample_blocks(structure, F.t, _trial_rng(seed, trial))
        winners = [i for i, (H, block) in enumerate(zip(F, blocks), start=1) if block in H]
        if len(winners) >= t:
            indices = winners[:t]
            matching = RainbowMatching((j, blocks[i - 1]) for j, i in enumerate(indices, start=1))
            logger.debug(f"random_permutation_certify: trial {trial} hit families {indices}")
            return CertifyOutcome(True, trial + 1, indices, matching, len(winners))

    logger.info(f"random_permutation_certify exhausted {max_trials} trials for t={t}")
    return CertifyOutcome(False, max_trials)


def indicator_sums(F: Family, trials: int, seed: int = 0) -> np.ndarray:
    """Per-trial sum of X_i over all families"""
    structure = _check_family(F)
    _check_seed(seed)
    sums = np.zeros(trials, dtype=np.int64)
    for trial in range(trials):
        blocks = sample_blocks(structure, F.t, _trial_rng(seed, trial))
        sums[trial] = sum(1 for H, block in zip(F, blocks) if block in H)
    return sums


def expected_indicator_sum(F: Family) -> float:
    structure = _check_family(F)
    return sum(F.sizes) / structure.n ** structure.k
