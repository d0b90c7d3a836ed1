"""Tests for the graph model and generators."""
import networkx as nx
import pytest
from hypothesis import given

from src.app.core.exceptions import GraphValidationError
from src.app.core.graph.generators import (
    gen_line_graph,
    gen_random_gnp,
    gen_unit_ball,
    gen_unit_disk,
    generate,
)
from src.app.core.graph.oracles import neighborhood_independence
from src.app.models.graph import Graph, GraphFamily, GraphFamilyParams
from tests.conftest import complete_graph, path_graph, star_graph
from tests.strategies import PROPERTY_SETTINGS, graphs


def test_graph_rejects_asymmetric_adjacency():
    """Test that a one-sided edge is rejected."""
    with pytest.raises(GraphValidationError):
        Graph(adjacency={1: (2,), 2: ()})


def test_graph_rejects_self_loop():
    """Test that self-loops are rejected."""
    with pytest.raises(GraphValidationError):
        Graph.from_edges([(3, 3)])


def test_graph_rejects_unknown_neighbor():
    with pytest.raises(GraphValidationError):
        Graph(adjacency={1: (2,)})


def test_from_edges_collapses_duplicates():
    """Test that repeated and reversed edges collapse."""
    graph = Graph.from_edges([(1, 2), (2, 1), (1, 2), (2, 3)])
    assert graph.edges() == [(1, 2), (2, 3)]
    assert graph.neighbors(2) == (1, 3)


@given(graphs())
@PROPERTY_SETTINGS
def test_graph_invariants_hold(graph):
    """Test symmetry, no self-loops and closure for arbitrary graphs."""
    for v in graph.nodes:
        for w in graph.neighbors(v):
            assert w != v
            assert w in graph.adjacency
            assert graph.has_edge(w, v)
    assert graph.num_edges() == len(graph.edges())


def test_ball_contains_nodes_within_radius():
    graph = path_graph([1, 2, 3, 4, 5])
    assert graph.ball(3, 1).nodes == (2, 3, 4)
    assert graph.ball(1, 0).nodes == (1,)
    assert graph.ball(1, 10).nodes == graph.nodes


def test_without_nodes_drops_incident_edges():
    graph = complete_graph([1, 2, 3, 4]).without_nodes([1])
    assert graph.nodes == (2, 3, 4)
    assert graph.num_edges() == 3


def test_edge_subgraph_keeps_nodes_and_rejects_non_edges():
    graph = complete_graph([1, 2, 3, 4])
    sub = graph.edge_subgraph([(2, 1), (3, 4)])
    assert sub.nodes == graph.nodes
    assert sub.edges() == [(1, 2), (3, 4)]
    with pytest.raises(GraphValidationError):
        path_graph([1, 2, 3]).edge_subgraph([(1, 3)])


def test_relabel_rejects_non_injective_mapping():
    with pytest.raises(GraphValidationError):
        path_graph([1, 2, 3]).relabel({1: 5, 2: 5, 3: 6})


def test_unit_disk_single_node_is_isolated():
    graph = gen_unit_disk(1, 0.5, seed=11)
    assert graph.nodes == (0,)
    assert graph.num_edges() == 0


def test_unit_disk_large_radius_is_complete():
    """Test that a radius above the square's diameter connects every pair."""
    graph = gen_unit_disk(2, 2.0, seed=5)
    assert graph.edges() == [(0, 1)]
    assert gen_unit_disk(6, 2.0, seed=5).num_edges() == 15


def test_unit_disk_is_deterministic_in_seed():
    assert gen_unit_disk(60, 0.2, seed=3) == gen_unit_disk(60, 0.2, seed=3)
    assert gen_unit_disk(60, 0.2, seed=3) != gen_unit_disk(60, 0.2, seed=4)


def test_unit_disk_example_independence_bound():
    """Test the n=50, radius=0.3, seed=7 instance against the disk bound."""
    graph = gen_unit_disk(50, 0.3, seed=7)
    assert neighborhood_independence(graph) <= 6


def test_unit_ball_uses_requested_dimension():
    graph = gen_unit_ball(40, 0.35, seed=2, dimension=3)
    assert graph.n == 40
    assert graph == gen_unit_ball(40, 0.35, seed=2, dimension=3)


def test_generators_reject_bad_parameters():
    with pytest.raises(ValueError):
        gen_unit_disk(0, 0.5, seed=1)
    with pytest.raises(ValueError):
        gen_unit_disk(5, 0.0, seed=1)
    with pytest.raises(ValueError):
        gen_random_gnp(5, 1.5, seed=1)


def test_line_graph_of_triangle_is_triangle(triangle):
    line = gen_line_graph(triangle)
    assert nx.is_isomorphic(line.to_networkx(), nx.complete_graph(3))


def test_line_graph_of_path_is_shorter_path():
    line = gen_line_graph(path_graph([1, 2, 3, 4]))
    assert line.nodes == (0, 1, 2)
    assert line.edges() == [(0, 1), (1, 2)]


def test_line_graph_of_star_is_complete():
    """Test that K(1,5) yields K5 with independence 1."""
    line = gen_line_graph(star_graph(0, [1, 2, 3, 4, 5]))
    assert line.num_edges() == 10
    assert neighborhood_independence(line) == 1


def test_line_graph_node_ids_follow_edge_rank():
    base = Graph.from_edges([(5, 9), (1, 5), (9, 12)])
    line = gen_line_graph(base)
    # ranks: (1,5)->0, (5,9)->1, (9,12)->2
    assert line.edges() == [(0, 1), (1, 2)]


def test_gnp_extremes():
    assert gen_random_gnp(7, 0.0, seed=1).num_edges() == 0
    assert gen_random_gnp(4, 1.0, seed=1) == complete_graph([0, 1, 2, 3])


def test_gnp_is_deterministic_in_seed():
    assert gen_random_gnp(10, 0.5, seed=3).edges() == gen_random_gnp(10, 0.5, seed=3).edges()


def test_generate_dispatches_on_family():
    params = GraphFamilyParams(family=GraphFamily.LINE_GRAPH, n=8, p=0.4, seed=2)
    assert generate(params) == gen_line_graph(gen_random_gnp(8, 0.4, seed=2))
    with pytest.raises(ValueError):
        generate(GraphFamilyParams(family=GraphFamily.EXPLICIT_FILE, path="x.edges"))


def test_family_params_require_family_fields():
    with pytest.raises(ValueError):
        GraphFamilyParams(family=GraphFamily.UNIT_DISK, n=10)
    with pytest.raises(ValueError):
        GraphFamilyParams(family=GraphFamily.RANDOM_GNP, n=10)
