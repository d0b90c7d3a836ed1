"""Tests for the backup placement service."""
from itertools import permutations

import pytest
from hypothesis import given

from src.app.core.exceptions import InvalidPlacementError, IsolatedVertexError
from src.app.core.graph.generators import gen_line_graph, gen_random_gnp, gen_unit_disk
from src.app.core.graph.oracles import max_degree, neighborhood_independence
from src.app.models.graph import Graph
from src.app.models.placement import Placement
from src.app.services.placement_service import (
    backup_placement_run,
    placement_load,
    relabel_placement,
    run_backup_placement,
    selected_subgraph,
    validate_placement,
)
from tests.conftest import complete_graph, path_graph
from tests.strategies import PROPERTY_SETTINGS, graphs

NINE_NODE_SELECTION = {4: 25, 6: 25, 7: 25, 9: 20, 20: 25, 25: 30, 30: 4, 40: 7, 50: 6}


def test_nine_node_selection(nine_node_graph):
    """Test the known selections of the nine-node example."""
    placement = run_backup_placement(nine_node_graph)
    assert placement.selection == NINE_NODE_SELECTION
    assert placement.isolated == []


def test_nine_node_load_and_selected_subgraph(nine_node_graph):
    placement = run_backup_placement(nine_node_graph)
    report = placement_load(nine_node_graph, placement, c_bound=4)
    assert report.max_load == 4
    assert report.in_load[25] == 4
    assert report.holds
    assert report.histogram == {0: 3, 1: 5, 4: 1}

    selected = selected_subgraph(nine_node_graph, placement)
    assert selected.num_edges() == 9
    assert max_degree(selected) == 5
    assert selected.nodes == nine_node_graph.nodes


def test_placement_runs_in_one_round(nine_node_graph, settings):
    _, trace = backup_placement_run(nine_node_graph, settings=settings)
    assert trace.complete
    assert trace.rounds_executed == 1
    assert trace.messages_sent == 0


def test_single_edge_nodes_select_each_other(single_edge):
    assert run_backup_placement(single_edge).selection == {4: 9, 9: 4}


def test_triangle_selects_a_directed_cycle(triangle):
    placement = run_backup_placement(triangle)
    assert placement.selection == {1: 2, 2: 3, 3: 1}
    assert placement_load(triangle, placement, c_bound=1).max_load == 1


@pytest.mark.parametrize("ids", list(permutations((10, 20, 30))))
@pytest.mark.parametrize("leaves", [(), (5, 25, 35)])
def test_adjacent_nodes_never_share_a_backup(ids, leaves):
    """Test that at most one of two adjacent neighbors of u selects u, for every ID order."""
    u, v1, v2 = ids
    edges = [(u, v1), (u, v2), (v1, v2)]
    edges += [(node, leaf) for node, leaf in zip(ids, leaves)]
    selection = run_backup_placement(Graph.from_edges(edges)).selection
    assert not (selection[v1] == u and selection[v2] == u)


def test_strict_mode_rejects_isolated_vertices():
    graph = Graph.from_edges([(1, 2)], nodes=[7])
    with pytest.raises(IsolatedVertexError) as exc_info:
        run_backup_placement(graph)
    assert exc_info.value.vertices == [7]


def test_lenient_mode_skips_isolated_vertices(caplog):
    graph = Graph.from_edges([(1, 2)], nodes=[7])
    placement = run_backup_placement(graph, strict=False)
    assert placement.selection == {1: 2, 2: 1}
    assert placement.isolated == [7]
    assert "isolated" in caplog.text

    report = placement_load(graph, placement, c_bound=1)
    assert report.in_load[7] == 0
    assert report.isolated_nodes == [7]
    validate_placement(graph, placement)


def test_load_report_lists_violations():
    graph = path_graph([1, 5, 2])
    placement = run_backup_placement(graph)
    report = placement_load(graph, placement, c_bound=1)
    assert placement.selection == {1: 5, 5: 1, 2: 5}
    assert report.violating_nodes == [5]
    assert not report.holds
    assert report.to_json_dict()["violations"] == [5]


def test_validate_placement_errors(triangle):
    with pytest.raises(InvalidPlacementError, match="not a neighbor"):
        validate_placement(path_graph([1, 2, 3]), Placement(selection={1: 3, 2: 1, 3: 2}))
    with pytest.raises(InvalidPlacementError, match="without a selection"):
        validate_placement(triangle, Placement(selection={1: 2, 2: 3}))
    with pytest.raises(InvalidPlacementError, match="not a node"):
        validate_placement(triangle, Placement(selection={1: 2, 2: 3, 3: 1, 9: 1}))


def test_selected_subgraph_validates_first(triangle):
    with pytest.raises(InvalidPlacementError):
        selected_subgraph(triangle, Placement(selection={1: 2}))


def test_order_preserving_relabel_commutes(nine_node_graph):
    """Test that scaling every ID leaves the selection pattern unchanged."""
    mapping = {v: 3 * v + 1 for v in nine_node_graph.nodes}
    relabeled = run_backup_placement(nine_node_graph.relabel(mapping))
    assert relabeled == relabel_placement(run_backup_placement(nine_node_graph), mapping)


def test_order_reversing_relabel_keeps_the_load_bound(nine_node_graph):
    mapping = {v: 100 - v for v in nine_node_graph.nodes}
    graph = nine_node_graph.relabel(mapping)
    report = placement_load(graph, run_backup_placement(graph), c_bound=4)
    assert report.holds


@given(graphs(min_degree=1))
@PROPERTY_SETTINGS
def test_load_is_bounded_by_neighborhood_independence(graph):
    """Test that no node is selected by more neighbors than its independence number."""
    c = neighborhood_independence(graph)
    placement = run_backup_placement(graph)
    assert placement_load(graph, placement, c_bound=c).holds
    assert max_degree(selected_subgraph(graph, placement)) <= c + 1


def _sweep_instances():
    for seed in range(200):
        yield gen_unit_disk(30, 0.3, seed=seed)
    for seed in range(150):
        yield gen_line_graph(gen_random_gnp(9, 0.4, seed=seed))
    for seed in range(150):
        yield gen_random_gnp(20, 0.25, seed=seed)


@pytest.mark.slow
def test_load_and_degree_bounds_across_families():
    """Test both placement bounds on 500 generated instances."""
    for graph in _sweep_instances():
        graph = graph.without_isolated()
        if graph.n == 0:
            continue
        c = neighborhood_independence(graph)
        placement = run_backup_placement(graph)
        assert placement_load(graph, placement, c_bound=c).holds
        assert max_degree(selected_subgraph(graph, placement)) <= c + 1


def test_complete_graph_load_is_one():
    graph = complete_graph(list(range(8)))
    report = placement_load(graph, run_backup_placement(graph), c_bound=1)
    assert report.max_load == 1
