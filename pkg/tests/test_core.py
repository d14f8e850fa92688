"""
Tests for the domain types, degree queries, validation, thresholds and family I/O
"""

import json
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from rainbow.core import (
    Family,
    FamilyFormatError,
    Hypergraph,
    ParameterError,
    PartiteStructure,
    RainbowMatching,
    binomial,
    degree,
    dump_family,
    load_family,
    min_l_degree,
    parse_family,
    theorem12_regime,
    theorem13_regime,
    theorem14_regime,
    threshold_corollary26,
    threshold_cover,
    threshold_erdos,
    threshold_matsumoto_tokushige,
    threshold_partite,
    threshold_product,
    threshold_question16,
    validate_rainbow,
)


# ============================================================================
# Hypergraph and partite structure
# ============================================================================

class TestPartiteStructure:
    def test_labeling(self):
        structure = PartiteStructure(2, 3)
        assert structure.universe_size == 6
        assert structure.part_vertices(1) == (1, 3, 5)
        assert structure.part_vertices(2) == (2, 4, 6)
        assert structure.part_of(4) == 2
        assert structure.vertex(2, 3) == 6

    def test_legality(self):
        structure = PartiteStructure(3, 2)
        assert structure.is_legal((1, 2, 3))
        assert not structure.is_legal((1, 4))

    def test_rejects_empty_shape(self):
        with pytest.raises(ParameterError):
            PartiteStructure(0, 3)


class TestHypergraph:
    def test_edges_are_canonical(self):
        H = Hypergraph(4, 2, [(3, 1), (2, 4), (1, 2)])
        assert H.edges == ((1, 2), (1, 3), (2, 4))
        assert (4, 2) in H
        assert H.vertices() == (1, 2, 3, 4)

    def test_rejects_bad_edges(self):
        with pytest.raises(ParameterError):
            Hypergraph(4, 2, [(1, 2), (2, 1)])
        with pytest.raises(ParameterError):
            Hypergraph(4, 2, [(1, 5)])
        with pytest.raises(ParameterError):
            Hypergraph(4, 2, [(1, 2, 3)])
        with pytest.raises(ParameterError):
            Hypergraph(4, 2, [(1, 3)], PartiteStructure(2, 2))

    def test_max_degree_vertex_prefers_lowest_id(self):
        H = Hypergraph(4, 2, [(1, 2), (3, 4)])
        assert H.max_degree_vertex() == (1, 1)
        assert H.max_degree_vertex(exclude=[1, 2]) == (3, 1)
        assert Hypergraph(4, 2).max_degree_vertex() is None

    def test_avoiding_and_link(self):
        H = Hypergraph.complete(4, 3)
        assert len(H.avoiding([4])) == 1
        link = H.link(1, avoid=[4])
        assert link.k == 2
        assert link.edges == ((2, 3),)

    def test_with_edges_keeps_structure(self):
        structure = PartiteStructure(2, 2)
        H = Hypergraph(4, 2, [(1, 2)], structure).with_edges([(3, 4)])
        assert H.partite == structure
        assert len(H) == 2


class TestFamily:
    def test_shape(self, star_pair):
        assert star_pair.t == 2
        assert star_pair.sizes == [3, 3]
        assert star_pair.ks == [2, 2]
        assert star_pair.size_product() == 9

    def test_subfamily_is_one_based(self):
        F = Family([Hypergraph.complete(4, 1), Hypergraph.complete(4, 2)])
        assert F.subfamily([2]).ks == [2]

    def test_rejects_mixed_universes(self):
        with pytest.raises(ParameterError):
            Family([Hypergraph.complete(4, 2), Hypergraph.complete(5, 2)])
        with pytest.raises(ParameterError):
            Family([])


# ============================================================================
# Degrees
# ============================================================================

class TestDegrees:
    def test_degree_of_sets(self):
        H = Hypergraph.complete(5, 3)
        assert degree(H, []) == 10
        assert degree(H, [1]) == 6
        assert degree(H, [1, 2]) == 3
        assert degree(H, [1, 2, 3]) == 1

    def test_illegal_set_has_degree_zero(self):
        structure = PartiteStructure(2, 2)
        H = Hypergraph(4, 2, [(1, 2), (1, 4), (2, 3), (3, 4)], structure)
        assert degree(H, [1, 3]) == 0

    def test_min_l_degree(self):
        assert min_l_degree(Hypergraph.complete(4, 2), 1) == 3
        star = Hypergraph(4, 2, [(1, 2), (1, 3), (1, 4)])
        assert min_l_degree(star, 1) == 1
        assert min_l_degree(star, 0) == 3

    def test_min_l_degree_over_legal_sets(self):
        structure = PartiteStructure(2, 2)
        H = Hypergraph(4, 2, [(1, 2), (1, 4), (2, 3), (3, 4)], structure)
        assert min_l_degree(H, 1) == 2

    def test_rejects_out_of_range(self):
        with pytest.raises(ParameterError):
            degree(Hypergraph.complete(4, 2), [5])
        with pytest.raises(ParameterError):
            min_l_degree(Hypergraph.complete(4, 2), 3)


@st.composite
def hypergraphs_with_sets(draw):
    """A small (optionally partite) hypergraph and a vertex set of its universe"""
    if draw(st.booleans()):
        k = draw(st.integers(min_value=1, max_value=3))
        n = draw(st.integers(min_value=1, max_value=4))
        structure = PartiteStructure(k, n)
        universe = structure.universe_size
        candidates = [tuple(sorted(c)) for c in combinations(range(1, universe + 1), k) if structure.is_legal(c)]
    else:
        structure = None
        universe = draw(st.integers(min_value=1, max_value=7))
        k = draw(st.integers(min_value=1, max_value=min(3, universe)))
        candidates = list(combinations(range(1, universe + 1), k))
    edges = draw(st.lists(st.sampled_from(candidates), unique=True, max_size=20))
    T = draw(st.lists(st.integers(min_value=1, max_value=universe), unique=True, max_size=4))
    return Hypergraph(universe, k, edges, structure), T


@settings(max_examples=80, deadline=None)
@given(case=hypergraphs_with_sets())
def test_degree_matches_scan(case):
    H, T = case
    assert degree(H, T) == sum(1 for e in H.edges if set(T) <= set(e))


# ============================================================================
# Validation
# ============================================================================

class TestValidateRainbow:
    def test_valid(self, star_pair):
        F = Family([star_pair[0], Hypergraph(4, 2, [(2, 3)])])
        result = validate_rainbow(F, RainbowMatching.from_edges([(1, 4), (2, 3)]))
        assert result
        assert result.reason is None

    def test_overlap(self, star_pair):
        result = validate_rainbow(star_pair, RainbowMatching.from_edges([(1, 2), (1, 3)]))
        assert not result
        assert result.reason == "overlap"

    def test_not_member(self, star_pair):
        result = validate_rainbow(star_pair, RainbowMatching.from_edges([(1, 2), (3, 4)]))
        assert result.reason == "not-member"

    def test_wrong_count(self, star_pair):
        result = validate_rainbow(star_pair, RainbowMatching.from_edges([(1, 2)]))
        assert result.reason == "wrong-count"

    def test_matching_dict_form(self):
        M = RainbowMatching([(2, (4, 3)), (1, (2, 1))])
        assert M.to_dict() == [{"family": 1, "edge": [1, 2]}, {"family": 2, "edge": [3, 4]}]
        assert RainbowMatching.from_dict(M.to_dict()) == M


# ============================================================================
# Thresholds
# ============================================================================

class TestThresholds:
    def test_closed_forms(self):
        assert binomial(5, 2) == 10
        assert binomial(2, 5) == 0
        assert threshold_partite(3, 2, 2) == 3
        assert threshold_erdos(5, 2, 2) == 4
        assert threshold_product(4, [2, 2]) == 9
        assert threshold_cover(6, 2, 3) == 9
        assert threshold_question16(6, 2, 2) == 25
        assert threshold_corollary26(3, 2) == 6
        assert threshold_matsumoto_tokushige(4, 2, 2) == 9

    def test_erdos_clique_term(self):
        # for small n the clique on kt-1 vertices dominates the cover
        assert threshold_erdos(5, 2, 3) == max(binomial(5, 2), threshold_cover(5, 2, 3))

    @pytest.mark.parametrize("n", range(1, 61))
    def test_pascal_identity(self, n):
        for k in range(1, n + 1):
            assert binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k)

    @pytest.mark.parametrize("n", range(1, 13))
    def test_cover_counts_sets_meeting_the_fixed_set(self, n):
        for k in range(1, min(n, 4) + 1):
            for t in range(1, n + 2):
                fixed = set(range(1, t))
                count = sum(1 for S in combinations(range(1, n + 1), k) if fixed & set(S))
                assert threshold_cover(n, k, t) == count

    def test_exact_big_integers(self):
        assert threshold_partite(10**6, 4, 3) == 2 * 10**18

    def test_product_requires_descending(self):
        with pytest.raises(ParameterError):
            threshold_product(6, [2, 3])
        with pytest.raises(ParameterError):
            threshold_product(6, [2])

    def test_matsumoto_requires_large_n(self):
        with pytest.raises(ParameterError):
            threshold_matsumoto_tokushige(3, 2, 2)

    def test_regimes(self):
        assert theorem12_regime(6, 3, 2)
        assert not theorem12_regime(5, 3, 2)
        assert theorem14_regime(13, 2, 1)
        assert not theorem14_regime(12, 2, 1)
        assert not theorem13_regime(10, [2, 2])
        assert theorem13_regime(10**5, [2, 2])


# ============================================================================
# Family files
# ============================================================================

class TestFamilyIO:
    def test_dump_and_load(self, tmp_path, star_pair):
        path = dump_family(star_pair, tmp_path / "stars.json")
        assert load_family(path) == star_pair

    def test_partite_document(self):
        F = parse_family({
            "universe": 4,
            "partite": {"k": 2, "n": 2},
            "families": [{"k": 2, "edges": [[1, 2], [3, 4]]}],
        })
        assert F.partite == PartiteStructure(2, 2)

    def test_duplicate_edge_names_location(self):
        with pytest.raises(FamilyFormatError) as info:
            parse_family({"universe": 4, "families": [
                {"k": 2, "edges": [[1, 2]]},
                {"k": 2, "edges": [[1, 3], [3, 1]]},
            ]})
        assert info.value.family_index == 2
        assert info.value.edge_index == 2
        assert str(info.value).startswith("family 2, edge 2: ")

    def test_wrong_uniformity(self):
        with pytest.raises(FamilyFormatError) as info:
            parse_family({"universe": 4, "families": [{"k": 2, "edges": [[1, 2, 3]]}]})
        assert info.value.family_index == 1
        assert info.value.edge_index == 1

    def test_illegal_partite_edge(self):
        with pytest.raises(FamilyFormatError):
            parse_family({
                "universe": 4,
                "partite": {"k": 2, "n": 2},
                "families": [{"k": 2, "edges": [[1, 3]]}],
            })

    def test_missing_file(self, tmp_path):
        with pytest.raises(FamilyFormatError):
            load_family(tmp_path / "absent.json")

    def test_invalid_json(self, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{not json", encoding="utf-8")
        with pytest.raises(FamilyFormatError):
            load_family(path)

    def test_written_document_is_plain_json(self, write_family, star_pair):
        path = write_family(star_pair)
        data = json.loads(path.read_text(encoding="utf-8"))
        assert data["families"][0]["edges"] == [[1, 2], [1, 3], [1, 4]]
