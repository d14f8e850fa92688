"""
Tests for the exact solver, the brute-force oracle, the matching number and
the extremal local search
"""

from itertools import combinations, combinations_with_replacement
from math import comb

import pytest
from hypothesis import given, settings, strategies as st
from pydantic import ValidationError

from rainbow.core import (
    Family,
    GuardViolation,
    Hypergraph,
    MatchingBudgetExceeded,
    ParameterError,
    threshold_product,
    validate_rainbow,
)
from rainbow.generators import (
    gen_clique,
    gen_complete,
    gen_complete_partite,
    gen_cover,
    gen_random_family,
    gen_star,
    gen_theorem13_tight,
)
from rainbow.solver import (
    SolverConfig,
    Verdict,
    brute_force_rainbow,
    extremal_search,
    find_rainbow,
    matching_number,
)

HEURISTICS = ["input-order", "smallest-family-first", "min-degree-vertex"]


# ============================================================================
# find_rainbow
# ============================================================================

class TestFindRainbow:
    @pytest.mark.parametrize("heuristic", HEURISTICS)
    def test_complete_graph_pair_has_matching(self, heuristic):
        F = Family([gen_complete(5, 2)] * 2)
        outcome = find_rainbow(F, SolverConfig(order_heuristic=heuristic))
        assert outcome.verdict is Verdict.MATCHING
        assert validate_rainbow(F, outcome.matching)

    @pytest.mark.parametrize("heuristic", HEURISTICS)
    def test_star_pair_has_none(self, star_pair, heuristic):
        outcome = find_rainbow(star_pair, SolverConfig(order_heuristic=heuristic))
        assert outcome.verdict is Verdict.NO_MATCHING
        assert outcome.matching is None

    def test_empty_member_short_circuits(self):
        F = Family([gen_complete(5, 2), Hypergraph(5, 2)])
        outcome = find_rainbow(F)
        assert outcome.verdict is Verdict.NO_MATCHING
        assert outcome.nodes == 0

    def test_forward_check_prunes_at_root(self, star_pair):
        # every star edge kills the other star, so one node settles it
        outcome = find_rainbow(star_pair, SolverConfig(node_budget=1))
        assert outcome.verdict is Verdict.NO_MATCHING
        assert outcome.pruned == 3

    def test_budget_exceeded_is_a_verdict(self):
        F = Family([gen_complete(5, 2)] * 2)
        outcome = find_rainbow(F, SolverConfig(node_budget=1))
        assert outcome.verdict is Verdict.BUDGET_EXCEEDED
        assert not outcome.found

    def test_outcome_dict(self):
        F = Family([gen_complete(4, 2)] * 2)
        payload = find_rainbow(F).to_dict()
        assert payload["verdict"] == "matching"
        assert len(payload["witness"]) == 2
        assert "millis" in payload["timing"]

    def test_theorem13_tight_has_no_matching(self):
        F = Family([gen_star(6, 3, 1), gen_star(6, 2, 1), gen_complete(6, 1)])
        assert F.size_product() == threshold_product(6, [3, 2, 1])
        assert find_rainbow(F).verdict is Verdict.NO_MATCHING


@pytest.mark.slow
@pytest.mark.parametrize("n", range(1, 9))
def test_theorem13_tight_grid(n):
    for t in (2, 3):
        for ks in combinations_with_replacement([3, 2, 1], t):
            if ks[0] > n:
                continue
            F = gen_theorem13_tight(n, ks)
            assert F.size_product() == threshold_product(n, ks)
            assert find_rainbow(F).verdict is Verdict.NO_MATCHING


# ============================================================================
# Oracle
# ============================================================================

class TestBruteForce:
    def test_agrees_on_small_cases(self, star_pair):
        assert brute_force_rainbow(star_pair) is None
        F = Family([gen_complete(5, 2)] * 2)
        assert validate_rainbow(F, brute_force_rainbow(F))

    def test_first_tuple_in_product_order(self):
        F = Family([gen_complete(4, 2)] * 2)
        assert brute_force_rainbow(F).edges == [(1, 2), (3, 4)]

    def test_limit_guard(self):
        F = Family([gen_complete(6, 2)] * 2)
        with pytest.raises(GuardViolation):
            brute_force_rainbow(F, limit=100)


@st.composite
def small_families(draw):
    n = draw(st.integers(min_value=3, max_value=6))
    t = draw(st.integers(min_value=1, max_value=3))
    ks = [draw(st.integers(min_value=1, max_value=min(3, n))) for _ in range(t)]
    sizes = [draw(st.integers(min_value=0, max_value=min(comb(n, k), 8))) for k in ks]
    seed = draw(st.integers(min_value=0, max_value=2**32 - 1))
    return gen_random_family(n, ks, sizes, seed=seed)


@settings(max_examples=60, deadline=None)
@given(F=small_families(), heuristic=st.sampled_from(HEURISTICS))
def test_solver_agrees_with_oracle(F, heuristic):
    outcome = find_rainbow(F, SolverConfig(order_heuristic=heuristic))
    oracle = brute_force_rainbow(F)
    assert outcome.found == (oracle is not None)
    if outcome.found:
        assert validate_rainbow(F, outcome.matching)


@settings(max_examples=40, deadline=None)
@given(F=small_families(), seed=st.integers(min_value=0, max_value=2**32 - 1), heuristic=st.sampled_from(HEURISTICS))
def test_verdict_does_not_depend_on_seed(F, seed, heuristic):
    baseline = find_rainbow(F).verdict
    assert find_rainbow(F, SolverConfig(order_heuristic=heuristic, seed=seed)).verdict is baseline


@settings(max_examples=40, deadline=None)
@given(F=small_families(), data=st.data())
def test_adding_edges_keeps_a_matching(F, data):
    grown = []
    for H in F:
        outside = [e for e in combinations(range(1, H.universe_size + 1), H.k) if e not in H]
        extra = data.draw(st.lists(st.sampled_from(outside), unique=True, max_size=4)) if outside else []
        grown.append(H.with_edges(extra))
    superset = Family(grown)
    if find_rainbow(F).found:
        assert find_rainbow(superset).found
    if not find_rainbow(superset).found:
        assert not find_rainbow(F).found


def test_negative_seed_is_rejected():
    with pytest.raises(ValidationError):
        SolverConfig(seed=-1)


# ============================================================================
# Matching number
# ============================================================================

class TestMatchingNumber:
    def test_known_values(self):
        assert matching_number(gen_complete(5, 2)) == 2
        assert matching_number(gen_star(4, 2, 1)) == 1
        assert matching_number(gen_complete_partite(3, 2)) == 3
        assert matching_number(Hypergraph(4, 2)) == 0

    def test_budget_reports_bounds(self):
        with pytest.raises(MatchingBudgetExceeded) as info:
            matching_number(gen_complete(6, 2), SolverConfig(node_budget=1))
        assert info.value.lower <= 3 <= info.value.upper

    @settings(max_examples=40, deadline=None)
    @given(n=st.integers(min_value=2, max_value=7), k=st.integers(min_value=1, max_value=3))
    def test_complete_graph(self, n, k):
        if k > n:
            return
        assert matching_number(gen_complete(n, k)) == n // k


@settings(max_examples=40, deadline=None)
@given(F=small_families(), t=st.integers(min_value=1, max_value=4))
def test_matching_number_agrees_with_repeated_family(F, t):
    H = F[0]
    repeated = Family([H] * t)
    assert (matching_number(H) >= t) == find_rainbow(repeated).found


@pytest.mark.slow
@pytest.mark.parametrize("k", [1, 2, 3])
@pytest.mark.parametrize("t", [1, 2, 3])
def test_clique_and_cover_matching_numbers(k, t):
    for n in range(k * t, 10):
        assert matching_number(gen_clique(n, k, t)) == t - 1
        assert matching_number(gen_cover(n, k, t)) == t - 1


# ============================================================================
# Extremal search
# ============================================================================

class TestExtremalSearch:
    def test_reaches_product_threshold(self):
        result = extremal_search(4, [2], t=2, budget=300, seed=1)
        assert result.verified
        assert result.product == threshold_product(4, [2, 2])
        assert not result.certified_optimal

    def test_reproducible(self):
        first = extremal_search(4, [2, 1], budget=150, seed=7)
        second = extremal_search(4, [2, 1], budget=150, seed=7)
        assert first.family == second.family

    def test_result_has_no_matching(self):
        result = extremal_search(5, [2, 2, 1], budget=200, seed=3)
        assert find_rainbow(result.family).verdict is Verdict.NO_MATCHING
        assert result.to_dict()["verified_no_matching"]

    def test_guards(self):
        with pytest.raises(GuardViolation):
            extremal_search(20, [2], t=2)
        with pytest.raises(ParameterError):
            extremal_search(4, [2, 2], t=3)
        with pytest.raises(ParameterError):
            extremal_search(4, [5], t=2)
        with pytest.raises(ParameterError):
            extremal_search(4, [2], t=2, seed=-1)
