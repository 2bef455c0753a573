import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cliquewidth.errors import MalformedGraph
from cliquewidth.graph import (
    Graph,
    Pattern,
    S122,
    TRIANGLE,
    contains_induced,
    from_edge_list,
    is_class_member,
    shortest_odd_cycle,
    two_coloring,
)

from conftest import cycle_graph, naive_contains, path_graph, petersen_graph


def random_graph(n, p, seed):
    rng = random.Random(seed)
    ids = [f"g{t}" for t in range(n)]
    edges = [
        (ids[i], ids[j])
        for i in range(n)
        for j in range(i + 1, n)
        if rng.random() < p
    ]
    return from_edge_list(edges, ids)


class TestConstruction:
    def test_k2(self):
        g = from_edge_list([("a", "b")])
        assert g.vertices == ("a", "b")
        assert g.edges() == (("a", "b"),)

    def test_single_isolated(self):
        g = from_edge_list([], ["a"])
        assert g.vertices == ("a",)
        assert g.m == 0

    def test_self_loop_rejected(self):
        with pytest.raises(MalformedGraph):
            from_edge_list([("a", "a")])

    def test_duplicate_edges_collapse(self):
        g = from_edge_list([("a", "b"), ("b", "a"), ("a", "b")])
        assert g.m == 1

    def test_subgraph(self):
        g = cycle_graph(5)
        sub = g.subgraph(["n1", "n2", "n4"])
        assert sub.edges() == (("n1", "n2"),)

    def test_equality_and_hash(self):
        g1 = from_edge_list([("a", "b")], ["c"])
        g2 = from_edge_list([("b", "a")], ["c"])
        assert g1 == g2
        assert hash(g1) == hash(g2)


class TestPatterns:
    def test_spider_shape(self):
        p = Pattern.spider(1, 2, 2)
        assert p.graph.n == 6
        assert p.graph.m == 5
        assert p.graph.degree("u") == 3

    def test_cycle_needs_three(self):
        with pytest.raises(ValueError):
            Pattern.cycle(2)

    def test_path(self):
        p = Pattern.path(4)
        assert p.graph.n == 4
        assert p.graph.m == 3


class TestContainsInduced:
    def test_spider_in_itself(self):
        g = Pattern.spider(1, 2, 2).graph
        found = contains_induced(g, S122)
        assert found is not None
        assert set(found.values()) == set(g.vertices)

    def test_p7_has_no_spider(self):
        assert contains_induced(path_graph(7), S122) is None

    def test_petersen_triangle_free(self):
        assert contains_induced(petersen_graph(), TRIANGLE) is None

    def test_petersen_contains_spider(self):
        # degree-3 vertices with girth 5 leave room for the spider
        assert contains_induced(petersen_graph(), S122) is not None

    def test_embedding_is_induced(self):
        g = cycle_graph(7)
        found = contains_induced(g, Pattern.path(4))
        assert found is not None
        image = list(found.values())
        sub = g.subgraph(image)
        assert sub.m == 3

    @pytest.mark.parametrize("seed", range(8))
    def test_matches_naive_enumeration(self, seed):
        g = random_graph(8, 0.3, seed)
        for pattern in (TRIANGLE, Pattern.path(4), Pattern.cycle(4), S122):
            fast = contains_induced(g, pattern) is not None
            assert fast == naive_contains(g, pattern.graph)


class TestClassMembership:
    def test_c5_is_member(self, c5):
        report = is_class_member(c5)
        assert report.triangle_free and report.s122_free and report.member

    def test_triangle_witnessed(self):
        report = is_class_member(Pattern.complete(3).graph)
        assert not report.triangle_free
        assert len(report.triangle_witness) == 3

    def test_c5_with_pendant(self, c5):
        g = from_edge_list(list(c5.edges()) + [("n1", "x")])
        report = is_class_member(g)
        assert report.triangle_free
        assert report.s122_free == (not naive_contains(g, S122.graph))

    def test_petersen_not_member(self):
        report = is_class_member(petersen_graph())
        assert report.triangle_free
        assert not report.s122_free
        image = report.s122_witness
        sub = petersen_graph().subgraph(image)
        assert sub.m == 5 and sub.n == 6


class TestOddGirth:
    def test_c7(self):
        length, cycle = shortest_odd_cycle(cycle_graph(7))
        assert length == 7
        assert len(cycle) == 7

    def test_tree_has_none(self):
        assert shortest_odd_cycle(path_graph(6)) is None

    def test_petersen(self):
        length, cycle = shortest_odd_cycle(petersen_graph())
        assert length == 5
        sub = petersen_graph().subgraph(cycle)
        assert sub.m == 5

    def test_witness_is_induced(self):
        g = from_edge_list(
            [("a", "b"), ("b", "c"), ("c", "d"), ("d", "e"), ("e", "a"), ("a", "x"), ("x", "c")]
        )
        length, cycle = shortest_odd_cycle(g)
        assert length == 5
        sub = g.subgraph(cycle)
        assert sub.m == 5

    @pytest.mark.parametrize("seed", range(15))
    def test_absent_iff_bipartite(self, seed):
        g = random_graph(9, 0.25, seed)
        assert (shortest_odd_cycle(g) is None) == (two_coloring(g) is not None)

    @given(st.integers(min_value=0, max_value=2**20), st.floats(0.05, 0.5))
    @settings(max_examples=40, deadline=None)
    def test_odd_girth_matches_brute(self, seed, p):
        g = random_graph(8, p, seed)
        result = shortest_odd_cycle(g)
        lengths = [
            length
            for length in (3, 5, 7)
            if contains_induced(g, Pattern.cycle(length)) is not None
        ]
        # a shortest odd cycle is induced, so induced-cycle search finds it
        if result is None:
            assert not lengths
        else:
            assert result[0] == min(lengths)
