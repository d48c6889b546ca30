import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import complete_graph
from gpgraph.graphs import SimpleGraph, from_edge_list
from gpgraph.groups import IndexOutOfRange


def random_graph_strategy(max_v=14):
    @st.composite
    def strat(draw):
        v = draw(st.integers(min_value=1, max_value=max_v))
        pairs = list(itertools.combinations(range(v), 2))
        edges = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs))) if pairs else []
        return SimpleGraph.from_edges(v, edges)

    return strat()


class TestConstruction:
    def test_rejects_self_loop(self):
        with pytest.raises(ValueError):
            SimpleGraph(2, [0b01, 0b00])
        with pytest.raises(ValueError):
            SimpleGraph.from_edges(3, [(1, 1)])

    def test_rejects_asymmetry(self):
        with pytest.raises(ValueError):
            SimpleGraph(2, [0b10, 0b00])

    def test_rejects_out_of_range(self):
        with pytest.raises(IndexOutOfRange):
            SimpleGraph.from_edges(2, [(0, 5)])

    def test_label_length(self):
        with pytest.raises(ValueError):
            SimpleGraph(2, [0, 0], labels=[7])


class TestQueries:
    def test_complete_examples(self):
        assert complete_graph(5).is_complete()
        assert not SimpleGraph.from_edges(3, []).is_complete()
        assert SimpleGraph.from_edges(1, []).is_complete()
        assert SimpleGraph.from_edges(0, []).is_complete()

    def test_complete_iff_edge_count(self):
        for v in range(6):
            for k in range(v * (v - 1) // 2 + 1):
                edges = list(itertools.combinations(range(v), 2))[:k]
                g = SimpleGraph.from_edges(v, edges)
                assert g.is_complete() == (g.edge_count() == v * (v - 1) // 2)

    def test_components_examples(self):
        two_triangles = SimpleGraph.from_edges(
            6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]
        )
        assert two_triangles.connected_components() == [[0, 1, 2], [3, 4, 5]]
        path = SimpleGraph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
        assert len(path.connected_components()) == 1
        edgeless = SimpleGraph.from_edges(7, [])
        assert edgeless.connected_components() == [[i] for i in range(7)]

    def test_components_partition(self):
        g = SimpleGraph.from_edges(9, [(0, 4), (4, 8), (1, 2), (5, 6), (6, 7)])
        comps = g.connected_components()
        flat = [x for c in comps for x in c]
        assert sorted(flat) == list(range(9))
        assert len(flat) == len(set(flat))
        mins = [min(c) for c in comps]
        assert mins == sorted(mins)

    def test_induced_subgraph(self):
        k5 = complete_graph(5)
        sub = k5.induced_subgraph([0, 2, 4])
        assert sub.v == 3 and sub.is_complete()
        assert sub.labels == [0, 2, 4]
        empty = k5.induced_subgraph([])
        assert empty.v == 0

    def test_induced_out_of_range(self):
        with pytest.raises(IndexOutOfRange):
            complete_graph(3).induced_subgraph([0, 9])

    @given(random_graph_strategy())
    @settings(max_examples=60, deadline=None)
    def test_induced_preserves_adjacency(self, g):
        verts = [x for x in range(g.v) if x % 2 == 0]
        sub = g.induced_subgraph(verts)
        for i, a in enumerate(verts):
            for j, b in enumerate(verts):
                if i != j:
                    assert sub.has_edge(i, j) == g.has_edge(a, b)

    def test_k5_clique_examples(self):
        assert complete_graph(5).contains_k5_clique() == [0, 1, 2, 3, 4]
        assert complete_graph(4).contains_k5_clique() is None

    @given(random_graph_strategy(max_v=10))
    @settings(max_examples=60, deadline=None)
    def test_k5_clique_matches_brute_force(self, g):
        # Oracle: exhaustive scan over all 5-subsets.
        brute = any(
            all(g.has_edge(a, b) for a, b in itertools.combinations(combo, 2))
            for combo in itertools.combinations(range(g.v), 5)
        )
        found = g.contains_k5_clique()
        assert (found is not None) == brute
        if found is not None:
            assert len(found) == 5
            assert g.induced_subgraph(found).is_complete()


class TestTextFormats:
    def test_dot_single_edge(self):
        g = SimpleGraph.from_edges(2, [(0, 1)])
        dot = g.to_dot()
        assert dot.count("--") == 1
        assert dot.startswith("graph G {")

    def test_dot_empty_graph_two_nodes(self):
        dot = SimpleGraph.from_edges(2, []).to_dot()
        assert dot.count(";") == 2
        assert "--" not in dot

    def test_dot_triangle(self):
        assert complete_graph(3).to_dot().count("--") == 3

    def test_dot_uses_labels(self):
        g = SimpleGraph.from_edges(2, [(0, 1)], labels=[7, 9])
        assert "7 -- 9;" in g.to_dot()

    def test_edge_list_round_trip(self):
        g = SimpleGraph.from_edges(5, [(0, 3), (1, 2), (3, 4)])
        again = from_edge_list(g.to_edge_list())
        assert again.v == g.v
        assert again.edges() == g.edges()
