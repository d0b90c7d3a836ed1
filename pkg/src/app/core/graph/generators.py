"""Seeded generators for the graph families used in experiments.

All generators are pure functions of their arguments; the seed fixes the
output bit for bit.
"""
import logging

import networkx as nx
import numpy as np

from src.app.models.graph import Graph, GraphFamily, GraphFamilyParams

logger = logging.getLogger(__name__)

_BLOCK = 512


def _threshold_graph(points: np.ndarray, radius: float) -> Graph:
    n = len(points)
    limit = radius * radius
    edges: list[tuple[int, int]] = []
    for start in range(0, n, _BLOCK):
        block = points[start : start + _BLOCK]
        d2 = ((block[:, None, :] - points[None, :, :]) ** 2).sum(axis=-1)
        rows, cols = np.nonzero(d2 <= limit)
        rows = rows + start
        keep = rows < cols
        edges.extend(zip(rows[keep].tolist(), cols[keep].tolist()))
    return Graph.from_edges(edges, nodes=range(n))


def gen_unit_ball(n: int, radius: float, seed: int, dimension: int = 3) -> Graph:
    """Random geometric graph in the unit cube ``[0, 1]^dimension``.

    Args:
        n: Number of points; node IDs are ``0..n-1`` in sampling order.
        radius: Two points are adjacent iff their Euclidean distance is at most this.
        seed: Seed of the point sampler.
        dimension: Ambient dimension.

    Returns:
        The thresholded distance graph.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if radius <= 0:
        raise ValueError("radius must be positive")
    points = np.random.default_rng(seed).random((n, dimension))
    graph = _threshold_graph(points, radius)
    logger.debug("unit-ball d=%d n=%d r=%.4f: %d edges", dimension, n, radius, graph.num_edges())
    return graph


def gen_unit_disk(n: int, radius: float, seed: int) -> Graph:
    """Unit disk graph on ``n`` points sampled uniformly in the unit square."""
    return gen_unit_ball(n, radius, seed, dimension=2)


def gen_line_graph(base: Graph) -> Graph:
    """Line graph of ``base``; node ``i`` is the ``i``-th edge of ``base.edges()``."""
    rank = {edge: i for i, edge in enumerate(base.edges())}
    line = nx.line_graph(base.to_networkx())

    def key(edge: tuple[int, int]) -> int:
        u, v = edge
        return rank[(min(u, v), max(u, v))]

    return Graph.from_edges(
        ((key(a), key(b)) for a, b in line.edges()),
        nodes=range(len(rank)),
    )


def gen_random_gnp(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi graph: each pair of ``0..n-1`` is an edge with probability ``p``."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must lie in [0, 1]")
    return Graph.from_networkx(nx.gnp_random_graph(n, p, seed=seed))


def generate(params: GraphFamilyParams) -> Graph:
    """Build the graph described by ``params``.

    Line graphs take ``n`` and ``p`` for their G(n, p) base graph.

    Raises:
        ValueError: For ``explicit-file``, which is loaded by the graph repository.
    """
    match params.family:
        case GraphFamily.UNIT_DISK:
            return gen_unit_disk(params.n, params.radius, params.seed)
        case GraphFamily.UNIT_BALL:
            return gen_unit_ball(params.n, params.radius, params.seed, params.dimension)
        case GraphFamily.LINE_GRAPH:
            return gen_line_graph(gen_random_gnp(params.n, params.p, params.seed))
        case GraphFamily.RANDOM_GNP:
            return gen_random_gnp(params.n, params.p, params.seed)
    raise ValueError(f"{params.family.value} graphs are loaded, not generated")
