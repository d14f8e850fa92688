"""
Tests for the bipartite greedy, the partite recursion and the permutation sampler
"""

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from rainbow.core import (
    Family,
    Hypergraph,
    HypothesisViolated,
    ParameterError,
    PartiteStructure,
    validate_rainbow,
)
from rainbow.constructive import (
    bipartite_greedy,
    distinct_representatives,
    expected_indicator_sum,
    indicator_sums,
    partite_recursive,
    random_permutation_certify,
    sample_blocks,
    verify_greedy_trace,
    verify_recursion_trace,
)
from rainbow.generators import gen_complete, gen_complete_partite, gen_partite_threshold, gen_random_family
from rainbow.solver import find_rainbow


# ============================================================================
# Bipartite greedy
# ============================================================================

class TestBipartiteGreedy:
    def test_complete_bipartite_family(self):
        F = Family([gen_complete_partite(4, 2)] * 3)
        matching, trace = bipartite_greedy(F)
        assert validate_rainbow(F, matching)
        assert [c.step for c in trace.chosen_vertices] == [1, 2, 3]
        assert [c.step for c in trace.chosen_edges] == [3, 2, 1]
        assert verify_greedy_trace(F, trace) == []

    def test_tampered_trace_is_reported(self):
        F = Family([gen_complete_partite(4, 2)] * 2)
        _, trace = bipartite_greedy(F)
        trace.chosen_vertices[0].residual_degree += 1
        assert verify_greedy_trace(F, trace)

    def test_part_size_must_exceed_t(self):
        F = Family([gen_complete_partite(3, 2)] * 3)
        with pytest.raises(HypothesisViolated) as info:
            bipartite_greedy(F)
        assert info.value.stage == "hypothesis"

    def test_threshold_size_is_rejected(self):
        F = Family([gen_partite_threshold(3, 2, 2)] * 2)
        with pytest.raises(HypothesisViolated):
            bipartite_greedy(F)

    def test_unchecked_run_reports_stuck_step(self):
        F = Family([gen_partite_threshold(3, 2, 2)] * 2)
        with pytest.raises(HypothesisViolated) as info:
            bipartite_greedy(F, check_hypothesis=False)
        assert info.value.stage == "vertex"
        assert info.value.step == 2

    def test_needs_graphs(self):
        with pytest.raises(ParameterError):
            bipartite_greedy(Family([gen_complete(4, 2)] * 2))


@settings(max_examples=40, deadline=None)
@given(
    t=st.integers(min_value=1, max_value=4),
    extra=st.integers(min_value=1, max_value=3),
    seed=st.integers(min_value=0, max_value=2**32 - 1),
)
def test_greedy_succeeds_above_threshold(t, extra, seed):
    n = t + extra
    size = (t - 1) * n + 1
    F = gen_random_family(n, [2] * t, [size] * t, partite=True, seed=seed)
    matching, trace = bipartite_greedy(F)
    assert validate_rainbow(F, matching)
    assert verify_greedy_trace(F, trace) == []


# ============================================================================
# Partite recursion
# ============================================================================

def _threshold_plus_one():
    """Two copies of the 3-partite threshold construction plus an edge missing vertex 1"""
    H = gen_partite_threshold(6, 3, 2).with_edges([(2, 3, 4)])
    return Family([H, H])


class TestPartiteRecursion:
    def test_distinct_representatives(self):
        assert distinct_representatives([[1, 2], [1]]) == [2, 1]
        assert distinct_representatives([[1], [1]]) is None

    def test_complete_family_links(self):
        F = Family([gen_complete_partite(6, 3)] * 2)
        matching, trace = partite_recursive(F)
        assert validate_rainbow(F, matching)
        assert trace.cases == ["LINK-RECURSE", "BASE-BIPARTITE"]
        assert verify_recursion_trace(F, trace) == []

    def test_high_degree_vertex_case(self):
        F = _threshold_plus_one()
        matching, trace = partite_recursive(F)
        assert validate_rainbow(F, matching)
        assert trace.cases == ["HIGH-DEGREE-VERTEX", "BASE-T1"]
        first = trace.events[0]
        assert first.vertex == 1
        assert first.reindexed == 1
        assert first.families == [2, 1]
        assert matching.picks[1] == (2, (2, 3, 4))
        assert verify_recursion_trace(F, trace) == []

    def test_tampered_trace_is_reported(self):
        F = _threshold_plus_one()
        _, trace = partite_recursive(F)
        trace.events[0].threshold = 999
        assert verify_recursion_trace(F, trace)

    def test_trace_for_other_part_size(self):
        F = _threshold_plus_one()
        _, trace = partite_recursive(F)
        other = Family([gen_complete_partite(7, 3)] * 2)
        assert verify_recursion_trace(other, trace)

    def test_single_family(self):
        F = Family([gen_complete_partite(6, 3)])
        matching, trace = partite_recursive(F)
        assert trace.cases == ["BASE-T1"]
        assert validate_rainbow(F, matching)

    def test_threshold_family_is_rejected(self):
        F = Family([gen_partite_threshold(6, 3, 2)] * 2)
        with pytest.raises(HypothesisViolated):
            partite_recursive(F)

    def test_small_part_size_is_rejected(self):
        F = Family([gen_complete_partite(5, 3)] * 2)
        with pytest.raises(HypothesisViolated):
            partite_recursive(F)

    def test_mixed_uniformity_is_rejected(self):
        F = Family([gen_complete_partite(6, 3), gen_complete_partite(6, 2, part_count=3)])
        with pytest.raises(ParameterError):
            partite_recursive(F)


# ============================================================================
# Permutation sampler
# ============================================================================

class TestSampler:
    def test_blocks_partition_the_structure(self):
        structure = PartiteStructure(3, 5)
        blocks = sample_blocks(structure, 5, np.random.default_rng(0))
        assert sorted(v for b in blocks for v in b) == list(range(1, 16))
        assert all(structure.is_legal(b) for b in blocks)

    def test_complete_families_succeed_first_trial(self):
        F = Family([gen_complete_partite(4, 3)] * 4)
        outcome = random_permutation_certify(F, t=2, seed=5)
        assert outcome.found
        assert outcome.trials == 1
        assert outcome.indices == [1, 2]
        assert outcome.successes == 4
        assert validate_rainbow(F.subfamily(outcome.indices), outcome.matching)

    def test_empty_families_exhaust(self):
        structure = PartiteStructure(2, 3)
        empty = Hypergraph(6, 2, partite=structure)
        outcome = random_permutation_certify(Family([empty] * 3), t=1, max_trials=10)
        assert outcome.exhausted
        assert outcome.trials == 10
        assert outcome.to_dict()["verdict"] == "exhausted"

    def test_reproducible(self):
        F = gen_random_family(4, [2] * 4, [6] * 4, partite=True, seed=9)
        first = random_permutation_certify(F, t=2, seed=3)
        second = random_permutation_certify(F, t=2, seed=3)
        assert first.to_dict() == second.to_dict()

    def test_indicator_sum_of_threshold_families(self):
        # exactly one block uses the fixed vertex of part 1
        F = Family([gen_partite_threshold(4, 2, 2)] * 4)
        sums = indicator_sums(F, trials=50, seed=1)
        assert np.all(sums == 1)
        assert expected_indicator_sum(F) == pytest.approx(1.0)

    def test_rejects_bad_input(self):
        with pytest.raises(ParameterError):
            random_permutation_certify(Family([gen_complete(4, 2)] * 2), t=1)
        F = Family([gen_complete_partite(3, 2)] * 3)
        with pytest.raises(ParameterError):
            random_permutation_certify(F, t=4)
        with pytest.raises(ParameterError):
            random_permutation_certify(Family([gen_complete_partite(2, 2)] * 3), t=1)
        with pytest.raises(ParameterError):
            random_permutation_certify(F, t=1, seed=-1)
        with pytest.raises(ParameterError):
            indicator_sums(F, trials=5, seed=-1)


@pytest.mark.parametrize("seed", range(5))
def test_recursion_on_random_threshold_families(seed):
    F = gen_random_family(6, [3, 3], [37, 37], partite=True, seed=seed)
    matching, trace = partite_recursive(F)
    assert validate_rainbow(F, matching)
    assert verify_recursion_trace(F, trace) == []
    assert find_rainbow(F).found


def test_recursion_delegates_graphs_to_greedy():
    F = gen_random_family(7, [2, 2, 2], [15, 15, 15], partite=True, seed=21)
    matching, trace = partite_recursive(F)
    assert trace.cases == ["BASE-BIPARTITE"]
    assert validate_rainbow(F, matching)
