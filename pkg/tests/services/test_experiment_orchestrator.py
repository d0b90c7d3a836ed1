"""Tests for the experiment orchestrator."""
import math

import pytest

from src.app.models.experiment import CheckStatus, ExitCode, ExperimentSpec
from src.app.models.graph import GraphFamily, GraphFamilyParams
from src.app.models.matching import required_iterations
from src.app.models.placement import Placement
from src.app.services.experiment_orchestrator import (
    ExperimentOrchestrator,
    build_graph,
    default_radius,
    get_orchestrator,
    resolve_c,
    sweep_specs,
)
from tests.conftest import NINE_NODE_PATH, star_graph


def _statuses(report) -> dict[str, CheckStatus]:
    return {check.name: check.status for check in report.checks}


def test_verify_nine_node_graph_passes(nine_node_graph, settings):
    """Test that every bound holds on the nine-node example."""
    report = ExperimentOrchestrator(settings).verify(nine_node_graph, source="nine-node")
    assert report.c == 4
    assert report.exit_code == ExitCode.OK
    assert set(_statuses(report)) == {
        "one-round",
        "placement-valid",
        "load-bound",
        "selected-degree-bound",
        "matching-ratio",
        "matching-floor",
    }
    assert report.graph == {"n": 9, "m": 12, "source": "nine-node"}


def test_verify_single_edge(single_edge, settings):
    report = ExperimentOrchestrator(settings).verify(single_edge)
    assert report.c == 1
    assert report.exit_code == ExitCode.OK


def test_verify_overloaded_placement_fails(nine_node_graph, settings):
    selection = {v: 25 for v in nine_node_graph.nodes if v != 25}
    selection[25] = 9
    report = ExperimentOrchestrator(settings).verify(nine_node_graph, placement=Placement(selection=selection))
    statuses = _statuses(report)
    assert statuses["load-bound"] == CheckStatus.FAILED
    assert "one-round" not in statuses
    assert report.exit_code == ExitCode.BOUND_VIOLATED


def test_verify_invalid_placement_fails(nine_node_graph, settings):
    report = ExperimentOrchestrator(settings).verify(nine_node_graph, placement=Placement(selection={9: 4}))
    assert _statuses(report)["placement-valid"] == CheckStatus.FAILED
    assert report.failed == ["placement-valid"]
    assert report.exit_code == ExitCode.BOUND_VIOLATED


def test_verify_with_too_small_c(nine_node_graph, settings):
    report = ExperimentOrchestrator(settings).verify(nine_node_graph, c=2)
    statuses = _statuses(report)
    assert statuses["load-bound"] == CheckStatus.FAILED
    assert statuses["selected-degree-bound"] == CheckStatus.FAILED
    assert statuses["matching-ratio"] == CheckStatus.SKIPPED
    assert report.exit_code == ExitCode.BOUND_VIOLATED


def test_verify_skips_when_oracle_is_infeasible(settings):
    """Test that a degree above the guard yields skipped checks and exit code 3."""
    graph = star_graph(0, list(range(1, 31)))
    report = ExperimentOrchestrator(settings).verify(graph)
    statuses = _statuses(report)
    assert report.c is None
    assert statuses["load-bound"] == CheckStatus.SKIPPED
    assert statuses["placement-valid"] == CheckStatus.PASSED
    assert report.exit_code == ExitCode.ORACLE_SKIPPED
    assert report.c_lower_bound is None


def test_verify_reports_a_sampled_lower_bound_when_skipping(settings):
    graph = star_graph(0, list(range(1, 31)))
    report = ExperimentOrchestrator(settings).verify(graph, samples=graph.n, seed=4)
    assert report.c is None
    assert report.c_lower_bound == 30
    assert report.exit_code == ExitCode.ORACLE_SKIPPED

    sure = ExperimentOrchestrator(settings).verify(graph, c=30, samples=graph.n)
    assert sure.c_lower_bound is None


def test_resolve_c_order(nine_node_graph):
    assert resolve_c(nine_node_graph, 7) == (7, "explicit")
    assert resolve_c(nine_node_graph) == (4, "oracle")
    big_star = star_graph(0, list(range(1, 31)))
    params = GraphFamilyParams(family=GraphFamily.UNIT_DISK, n=31, radius=0.5)
    assert resolve_c(big_star, params=params) == (6, "family")
    assert resolve_c(big_star) == (30, "max-degree")


def test_default_radius():
    assert default_radius(100) == pytest.approx(math.sqrt(8 / (math.pi * 100)))
    assert default_radius(100, dimension=3) == pytest.approx((6 / (math.pi * 100)) ** (1 / 3))


def test_build_graph_loads_explicit_files(nine_node_graph):
    params = GraphFamilyParams(family=GraphFamily.EXPLICIT_FILE, path=str(NINE_NODE_PATH))
    assert build_graph(params) == nine_node_graph


def test_sweep_specs():
    specs = sweep_specs(GraphFamily.RANDOM_GNP, [16, 32], seed=5, repeats=3)
    assert len(specs) == 6
    assert [(s.graph.n, s.graph.seed) for s in specs[:3]] == [(16, 5), (16, 6), (16, 7)]
    assert specs[0].graph.p == 0.5
    assert specs[0].graph.radius is None

    disks = sweep_specs(GraphFamily.UNIT_DISK, [50], seed=0, repeats=1)
    assert disks[0].graph.radius == pytest.approx(default_radius(50))
    assert disks[0].graph.p is None


def test_bench_instance(settings):
    params = GraphFamilyParams(family=GraphFamily.UNIT_DISK, n=40, radius=0.3, seed=1)
    row = ExperimentOrchestrator(settings).bench_instance(ExperimentSpec(command="bench", graph=params))
    assert row.family == "unit-disk"
    assert row.n == 40
    assert row.bp_rounds == 1
    assert row.approx_size * 2.5 >= row.mcm_size
    assert row.ratio == pytest.approx(row.mcm_size / row.approx_size)
    assert len(row.residual) <= required_iterations(0.5, row.c)


def test_bench_instance_without_oracle(settings):
    params = GraphFamilyParams(family=GraphFamily.RANDOM_GNP, n=30, p=0.2, seed=2)
    spec = ExperimentSpec(command="bench", graph=params, oracle=False)
    row = ExperimentOrchestrator(settings).bench_instance(spec)
    assert row.mcm_size is None
    assert row.ratio is None
    assert row.to_csv_cells()[10:12] == ["", ""]


@pytest.mark.asyncio
async def test_run_sweep_returns_sorted_rows(settings):
    orchestrator = ExperimentOrchestrator(settings)
    specs = sweep_specs(GraphFamily.UNIT_DISK, [48, 32], seed=3, repeats=2)
    rows = await orchestrator.run_sweep(specs)
    assert [(row.n, row.seed) for row in rows] == [(32, 3), (32, 4), (48, 3), (48, 4)]
    sequential = [orchestrator.bench_instance(spec) for spec in specs]
    assert rows == sorted(sequential, key=lambda row: row.sort_key)


@pytest.mark.asyncio
async def test_run_sweep_with_no_specs(settings):
    assert await ExperimentOrchestrator(settings).run_sweep([]) == []


def test_get_orchestrator_is_a_singleton():
    assert get_orchestrator() is get_orchestrator()
