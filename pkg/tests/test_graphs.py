import io
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rhokit import (
    DomainError,
    Graph,
    GraphSpecError,
    WeightedGraph,
    blowup,
    complete,
    cycle,
    cycle_tail,
    disjoint_union,
    hub,
    multipartite,
    parse_graph_spec,
    path,
    paw,
    star,
)
from rhokit.graphs import (
    as_complete,
    as_cycle,
    as_hub,
    as_multipartite,
    as_path,
    as_star,
    family_spec,
    is_paw,
    standard_graph,
)


class TestGraph:
    def test_canonical_edge_orientation(self):
        g = Graph.from_edges(3, [(2, 0), (1, 0)])
        assert g.edges == frozenset({(0, 2), (0, 1)})

    def test_rejects_loops(self):
        with pytest.raises(DomainError):
            Graph.from_edges(2, [(1, 1)])

    def test_rejects_out_of_range(self):
        with pytest.raises(DomainError):
            Graph.from_edges(2, [(0, 2)])

    def test_degrees_and_neighbors(self):
        g = star(3)
        assert g.degrees() == [3, 1, 1, 1]
        assert g.neighbors(0) == {1, 2, 3}
        assert g.neighbors(2) == {0}

    def test_connectivity(self):
        assert path(4).is_connected()
        assert not disjoint_union(path(1), path(1)).is_connected()
        assert Graph.from_edges(1, []).is_connected()

    def test_isolated_vertices_allowed(self):
        g = Graph.from_edges(5, [(0, 1)])
        assert g.vertex_count == 5
        assert g.edge_count == 1


class TestFamilies:
    def test_counts(self):
        assert (path(3).vertex_count, path(3).edge_count) == (4, 3)
        assert (cycle(5).vertex_count, cycle(5).edge_count) == (5, 5)
        assert (complete(4).vertex_count, complete(4).edge_count) == (4, 6)
        assert (star(4).vertex_count, star(4).edge_count) == (5, 4)
        assert multipartite([2, 2]).edge_count == 4
        assert multipartite([3, 2, 1]).edge_count == 3 * 2 + 3 * 1 + 2 * 1
        assert paw().edge_count == 4

    def test_hub_shape(self):
        g = hub([1, 1, 1])
        # triangle plus three pendants, each adjacent to two clique vertices
        assert g.vertex_count == 6
        assert g.edge_count == 3 + 3 * 2
        assert sorted(g.degrees()) == [2, 2, 2, 4, 4, 4]

    def test_cycle_tail_shape(self):
        g = cycle_tail(2, 3)
        assert g.vertex_count == 8
        assert g.edge_count == 8
        assert sorted(g.degrees()) == [1, 2, 2, 2, 2, 2, 2, 3]

    def test_family_bounds(self):
        for bad in (lambda: path(0), lambda: cycle(2), lambda: complete(0), lambda: star(0)):
            with pytest.raises(DomainError):
                bad()

    def test_standard_graph_and_spec_round_trip(self):
        cases = [
            ("path", [4]),
            ("cycle", [6]),
            ("complete", [3]),
            ("star", [5]),
            ("multipartite", [3, 2, 1]),
            ("hub", [2, 0, 1]),
            ("cycle_tail", [2, 3]),
        ]
        for family, params in cases:
            g = standard_graph(family, params)
            assert parse_graph_spec(family_spec(family, params)).edges == g.edges


class TestSurgery:
    def test_blowup_of_edge_is_complete_bipartite(self):
        g = blowup(path(1), [2, 3])
        assert as_multipartite(g) == (3, 2)

    def test_blowup_validation(self):
        with pytest.raises(DomainError):
            blowup(path(1), [1])
        with pytest.raises(DomainError):
            blowup(path(1), [0, 1])

    def test_disjoint_union(self):
        g = disjoint_union(cycle(3), cycle(4))
        assert g.vertex_count == 7
        assert g.edge_count == 7
        assert not g.is_connected()


class TestRecognizers:
    def test_paths_cycles_completes(self):
        assert as_path(path(4)) == 4
        assert as_path(cycle(4)) is None
        assert as_cycle(cycle(7)) == 7
        assert as_cycle(path(3)) is None
        assert as_complete(complete(5)) == 5
        assert as_complete(cycle(4)) is None
        # K3 is both a cycle and a complete graph
        assert as_cycle(complete(3)) == 3

    def test_multipartite_and_star(self):
        assert as_multipartite(multipartite([1, 2, 3])) == (3, 2, 1)
        assert as_multipartite(path(2)) == (2, 1)  # P2 = K_{2,1}
        assert as_multipartite(paw()) is None
        assert as_star(star(4)) == 4
        assert as_star(multipartite([2, 2])) is None

    def test_recognizers_ignore_labeling(self):
        g = cycle(5).relabel([3, 0, 4, 1, 2])
        assert as_cycle(g) == 5

    def test_hub_recognizer(self):
        assert as_hub(hub([1, 1, 1]), clique_size=3) == (1, 1, 1)
        assert as_hub(hub([2, 0, 1]), clique_size=3) in {(2, 1, 0), (2, 0, 1), (0, 1, 2), (1, 0, 2), (0, 2, 1), (1, 2, 0)}
        assert as_hub(cycle(6), clique_size=3) is None

    def test_paw_recognizer(self):
        assert is_paw(paw())
        assert is_paw(parse_graph_spec("paw"))
        assert not is_paw(star(3))


class TestSpecLanguage:
    def test_basic_forms(self):
        assert parse_graph_spec("P3").edges == path(3).edges
        assert parse_graph_spec("C4").edges == cycle(4).edges
        assert parse_graph_spec("K5").edges == complete(5).edges
        assert parse_graph_spec("S3").edges == star(3).edges
        assert parse_graph_spec("K[2,2]").edges == multipartite([2, 2]).edges
        assert parse_graph_spec("Khub[1,1,1]").edges == hub([1, 1, 1]).edges
        assert parse_graph_spec("Gtail[2,1]").edges == cycle_tail(2, 1).edges

    def test_copies(self):
        g = parse_graph_spec("3xK2")
        assert g.vertex_count == 6
        assert g.edge_count == 3
        assert not g.is_connected()

    def test_edge_file(self, tmp_path):
        f = tmp_path / "g.edges"
        f.write_text("4\n0 1\n1 2\n2 3\n")
        g = parse_graph_spec(f"@{f}")
        assert as_path(g) == 3

    @pytest.mark.parametrize("bad", ["", "  ", "P0", "C2", "Q7", "K[]", "0xP1", "P(", "paws"])
    def test_rejects(self, bad):
        with pytest.raises(GraphSpecError):
            parse_graph_spec(bad)

    def test_error_carries_position(self):
        with pytest.raises(GraphSpecError) as exc:
            parse_graph_spec("P(")
        assert "position" in str(exc.value)


class TestWeightedGraph:
    def test_validation(self):
        with pytest.raises(DomainError):
            WeightedGraph([0.5, 0.6], [[0, 0], [0, 0]])  # masses don't sum to 1
        with pytest.raises(DomainError):
            WeightedGraph([1.0], [[1.5]])  # weight above 1
        with pytest.raises(DomainError):
            WeightedGraph([0.5, 0.5], [[0, 0.2], [0.3, 0]])  # asymmetric
        with pytest.raises(DomainError):
            WeightedGraph([1.0, 0.0], [[0, 0], [0, 0]])  # zero mass

    def test_immutable(self):
        w = WeightedGraph.constant(0.5)
        with pytest.raises(AttributeError):
            w.masses = np.array([1.0])
        with pytest.raises(ValueError):
            w.weights[0, 0] = 0.9

    def test_from_graph(self):
        w = WeightedGraph.from_graph(cycle(4))
        assert w.block_count == 4
        assert w.weights[0, 1] == 1.0
        assert w.weights[0, 2] == 0.0

    def test_dump_load_round_trip(self):
        w = WeightedGraph([0.25, 0.75], [[1.0, 1 / 3], [1 / 3, 0.125]])
        buf = io.StringIO()
        w.dump(buf)
        buf.seek(0)
        assert WeightedGraph.load(buf) == w

    def test_load_rejects_garbage(self):
        with pytest.raises(DomainError):
            WeightedGraph.load(io.StringIO(""))
        with pytest.raises(DomainError):
            WeightedGraph.load(io.StringIO("2\n0.5 0.5\n1 0\n"))


@settings(max_examples=50, deadline=None)
@given(st.lists(st.integers(min_value=1, max_value=4), min_size=1, max_size=4))
def test_multipartite_recognizer_round_trips(parts):
    g = multipartite(parts)
    assert as_multipartite(g) == tuple(sorted(parts, reverse=True))


@settings(max_examples=50, deadline=None)
@given(st.integers(min_value=1, max_value=8))
def test_path_recognizer_round_trips(m):
    assert as_path(path(m)) == m
    assert math.isclose(sum(path(m).degrees()), 2 * m)
