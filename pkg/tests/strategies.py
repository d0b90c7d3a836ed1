"""Hypothesis strategies for graph property tests."""
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from src.app.models.graph import Graph

PROPERTY_SETTINGS = settings(
    max_examples=200,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.function_scoped_fixture],
)


@st.composite
def graphs(draw, min_nodes: int = 1, max_nodes: int = 12, max_id: int = 1000, min_degree: int = 0):
    """Simple graphs on distinct arbitrary IDs.

    With ``min_degree=1`` every node without an edge is dropped.
    """
    ids = draw(st.lists(st.integers(0, max_id), min_size=min_nodes, max_size=max_nodes, unique=True))
    pairs = [(u, v) for i, u in enumerate(ids) for v in ids[i + 1 :]]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    graph = Graph.from_edges(edges, nodes=ids)
    if min_degree:
        graph = graph.without_isolated()
    return graph


@st.composite
def small_edge_graphs(draw, max_edges: int = 12):
    """Graphs with at least one edge and at most ``max_edges`` edges."""
    ids = draw(st.lists(st.integers(0, 60), min_size=2, max_size=10, unique=True))
    pairs = [(u, v) for i, u in enumerate(ids) for v in ids[i + 1 :]]
    edges = draw(st.lists(st.sampled_from(pairs), min_size=1, max_size=max_edges, unique=True))
    return Graph.from_edges(edges)
