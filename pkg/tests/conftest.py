"""Shared fixtures for tests."""
from pathlib import Path

import networkx as nx
import pytest

from src.app.core.settings import SimulatorSettings
from src.app.models.graph import Graph
from src.app.repositories.graph_repository import load_graph

DATA_DIR = Path(__file__).resolve().parent.parent / "data"
NINE_NODE_PATH = DATA_DIR / "nine_node.edges"


def path_graph(ids: list[int]) -> Graph:
    """Path visiting ``ids`` in the given order."""
    return Graph.from_edges(zip(ids, ids[1:]), nodes=ids)


def cycle_graph(ids: list[int]) -> Graph:
    return Graph.from_edges(zip(ids, ids[1:] + ids[:1]))


def complete_graph(ids: list[int]) -> Graph:
    return Graph.from_edges((u, v) for i, u in enumerate(ids) for v in ids[i + 1 :])


def star_graph(center: int, leaves: list[int]) -> Graph:
    return Graph.from_edges((center, leaf) for leaf in leaves)


@pytest.fixture
def nine_node_graph() -> Graph:
    """The nine-node example graph shipped in ``data/``."""
    return load_graph(NINE_NODE_PATH)


@pytest.fixture
def single_edge() -> Graph:
    return Graph.from_edges([(4, 9)])


@pytest.fixture
def triangle() -> Graph:
    return complete_graph([1, 2, 3])


@pytest.fixture
def petersen() -> Graph:
    return Graph.from_networkx(nx.petersen_graph())


@pytest.fixture
def settings() -> SimulatorSettings:
    """Settings independent of the environment."""
    return SimulatorSettings(
        _env_file=None,
        record_digests=True,
        keep_full_states=False,
        max_rounds=10_000,
        independence_degree_guard=25,
        mcm_edge_guard=40,
        sweep_workers=2,
    )


@pytest.fixture(autouse=True)
def _reset_singletons(monkeypatch):
    """Give each test fresh global settings and orchestrator instances."""
    from src.app.core import settings as settings_module
    from src.app.services import experiment_orchestrator

    monkeypatch.setattr(settings_module, "_settings", SimulatorSettings(_env_file=None))
    monkeypatch.setattr(experiment_orchestrator, "_orchestrator", None)
