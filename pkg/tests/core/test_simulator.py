"""Tests for the synchronous round simulator."""
from collections.abc import Mapping
from typing import Any

import pytest
from hypothesis import given

from src.app.core.engine import NodeProgram, StepResult, SyncSimulator, log_star, round_count, run_sync
from src.app.core.exceptions import IncompleteTraceError, SimulationError
from src.app.core.graph.generators import gen_random_gnp, gen_unit_disk
from src.app.core.graph.oracles import max_degree
from src.app.core.programs import ForestMatchingProgram
from src.app.models.graph import Graph
from src.app.models.trace import ModelContext
from tests.conftest import path_graph
from tests.strategies import PROPERTY_SETTINGS, graphs


class IdentityProgram(NodeProgram[int]):
    """Outputs the node's own ID in round 1."""

    @property
    def program_name(self) -> str:
        return "identity"

    def init(self, node, neighbors, context):
        return node

    def step(self, state, inbox):
        return StepResult(state, {}, state)


class FloodProgram(NodeProgram[tuple]):
    """Collects the IDs it hears about and never decides."""

    @property
    def program_name(self) -> str:
        return "flood"

    def init(self, node, neighbors, context):
        return (neighbors, frozenset({node}))

    def step(self, state, inbox: Mapping[int, Any]) -> StepResult[tuple]:
        neighbors, known = state
        known = known.union(*inbox.values())
        return StepResult((neighbors, known), {w: known for w in neighbors})


class StrayProgram(IdentityProgram):
    def step(self, state, inbox):
        return StepResult(state, {state + 1000: "hello"}, state)


@given(graphs())
@PROPERTY_SETTINGS
def test_identity_program_finishes_in_one_round(graph):
    trace = run_sync(graph, IdentityProgram())
    assert trace.complete
    assert trace.outputs == {v: v for v in graph.nodes}
    assert round_count(trace) == 1


def test_runs_are_deterministic():
    graph = gen_unit_disk(60, 0.25, seed=9)
    first = run_sync(graph, ForestMatchingProgram())
    second = run_sync(graph, ForestMatchingProgram())
    assert first.outputs == second.outputs
    assert [s.digests for s in first.snapshots] == [s.digests for s in second.snapshots]


def test_messages_sent_equal_messages_delivered_next_round():
    """Test that every message sent in round r is delivered in round r + 1."""
    trace = run_sync(gen_random_gnp(40, 0.15, seed=2), ForestMatchingProgram())
    snapshots = trace.snapshots
    for earlier, later in zip(snapshots, snapshots[1:]):
        assert earlier.messages_sent == later.messages_delivered
    assert snapshots[0].messages_delivered == 0


@pytest.mark.parametrize("seed", range(5))
def test_state_after_r_rounds_depends_only_on_ball(seed):
    """Test that a node's state after r rounds is the same on the (r+1)-ball."""
    graph = gen_random_gnp(30, 0.12, seed=seed)
    context = ModelContext(id_bound=graph.max_id, degree_bound=max_degree(graph))
    rounds = 3
    full = SyncSimulator(graph, ForestMatchingProgram(), context=context)
    full.run(max_rounds=rounds, stop_when_done=False)
    for v in graph.nodes[:10]:
        local = SyncSimulator(graph.ball(v, rounds + 1), ForestMatchingProgram(), context=context)
        local.run(max_rounds=rounds, stop_when_done=False)
        assert local.states[v] == full.states[v]


def test_flooding_reaches_the_ball():
    graph = path_graph([1, 2, 3, 4, 5, 6])
    simulator = SyncSimulator(graph, FloodProgram())
    trace = simulator.run(max_rounds=3, stop_when_done=False)
    assert trace.rounds_executed == 3
    assert simulator.states[1][1] == frozenset({1, 2, 3})


def test_undecided_run_is_incomplete():
    trace = run_sync(path_graph([1, 2, 3]), FloodProgram(), max_rounds=4)
    assert not trace.complete
    assert trace.rounds_executed == 4
    with pytest.raises(IncompleteTraceError):
        round_count(trace)


def test_round_hook_replaces_states():
    graph = path_graph([1, 2])
    seen: list[int] = []

    def hook(round_index, states):
        seen.append(round_index)
        return {v: state * 10 for v, state in states.items()}

    simulator = SyncSimulator(graph, IdentityProgram())
    trace = simulator.run(max_rounds=2, stop_when_done=False, round_hook=hook)
    assert seen == [1, 2]
    assert simulator.states == {1: 100, 2: 200}
    assert trace.outputs == {1: 10, 2: 20}
    assert trace.output_rounds == {1: 1, 2: 1}


def test_message_to_non_neighbor_is_rejected():
    with pytest.raises(SimulationError, match="non-neighbor"):
        run_sync(path_graph([1, 2]), StrayProgram())


def test_max_rounds_must_be_positive():
    with pytest.raises(ValueError):
        run_sync(path_graph([1, 2]), IdentityProgram(), max_rounds=0)


def test_digests_follow_settings(settings):
    settings.record_digests = False
    trace = run_sync(path_graph([1, 2]), IdentityProgram(), settings=settings)
    assert trace.snapshots[0].digests == {}

    settings.record_digests = True
    settings.keep_full_states = True
    trace = run_sync(path_graph([1, 2]), IdentityProgram(), settings=settings)
    assert trace.snapshots[0].states == {1: 1, 2: 2}
    assert set(trace.snapshots[0].digests) == {1, 2}


def test_empty_graph_completes_immediately():
    trace = run_sync(Graph(), IdentityProgram())
    assert trace.complete
    assert trace.rounds_executed == 1


@pytest.mark.parametrize(
    ("x", "expected"),
    [(1, 0), (2, 0), (4, 1), (5, 2), (16, 2), (65536, 3), (2**100, 4)],
)
def test_log_star(x, expected):
    assert log_star(x) == expected
