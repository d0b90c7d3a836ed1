"""Exact and sampled oracles for small instances."""
import logging

import networkx as nx
import numpy as np

from src.app.core.exceptions import OracleInfeasibleError
from src.app.core.settings import get_settings
from src.app.models.graph import Graph, GraphFamily
from src.app.models.matching import Matching

logger = logging.getLogger(__name__)

_KISSING_NUMBERS = {2: 6, 3: 12, 4: 24}


def max_degree(g: Graph) -> int:
    return max((g.degree(v) for v in g.nodes), default=0)


def _neighborhood_mis(g: Graph, v: int) -> int:
    neighbors = g.neighbors(v)
    if not neighbors:
        return 0
    complement = nx.complement(g.induced_subgraph(neighbors).to_networkx())
    _, size = nx.max_weight_clique(complement, weight=None)
    return size


def neighborhood_independence(g: Graph, degree_guard: int | None = None) -> int:
    """Largest independent set inside any neighborhood, by exact clique search.

    Args:
        g: The graph.
        degree_guard: Largest degree searched exhaustively. Defaults to
            ``settings.independence_degree_guard``.

    Raises:
        OracleInfeasibleError: If some node's degree exceeds the guard.
    """
    guard = degree_guard if degree_guard is not None else get_settings().independence_degree_guard
    for v in g.nodes:
        if g.degree(v) > guard:
            raise OracleInfeasibleError(
                f"node {v} has degree {g.degree(v)} > {guard}; "
                "use sampled mode or pass an explicit independence bound (--c)"
            )
    c = max((_neighborhood_mis(g, v) for v in g.nodes), default=0)
    logger.debug("Neighborhood independence of %d-node graph: %d", g.n, c)
    return c


def neighborhood_independence_sampled(g: Graph, samples: int, seed: int) -> int:
    """Seeded lower bound on the neighborhood independence.

    A greedy maximal independent set is grown inside the neighborhoods of up to
    ``samples`` nodes drawn without replacement.
    """
    nodes = np.array(g.nodes, dtype=np.int64)
    if nodes.size == 0 or samples < 1:
        return 0
    rng = np.random.default_rng(seed)
    chosen = np.sort(rng.choice(nodes, size=min(samples, nodes.size), replace=False))
    best = 0
    for v in chosen.tolist():
        if not g.degree(v):
            continue
        sub = g.induced_subgraph(g.neighbors(v)).to_networkx()
        found = nx.maximal_independent_set(sub, seed=int(rng.integers(2**32)))
        best = max(best, len(found))
    return best


def family_independence_bound(family: GraphFamily | str, dimension: int = 3) -> int | None:
    """Known upper bound on the neighborhood independence of a family, if any."""
    family = GraphFamily(family)
    if family == GraphFamily.UNIT_DISK:
        return _KISSING_NUMBERS[2]
    if family == GraphFamily.UNIT_BALL:
        return _KISSING_NUMBERS.get(dimension)
    if family == GraphFamily.LINE_GRAPH:
        return 2
    return None


def mcm_brute_force(g: Graph, edge_guard: int | None = None) -> Matching:
    """Exact maximum matching by exhaustive search.

    Vertices are decided in ascending ID order; each one is matched to a free
    higher neighbor (ascending) before being left unmatched. The first maximum
    found is therefore the lexicographically least one.

    Raises:
        OracleInfeasibleError: If the graph has more edges than the guard.
    """
    guard = edge_guard if edge_guard is not None else get_settings().mcm_edge_guard
    if g.num_edges() > guard:
        raise OracleInfeasibleError(
            f"graph has {g.num_edges()} edges > {guard}; use mcm_augmenting_path instead"
        )

    order = [v for v in g.nodes if g.degree(v)]
    used: set[int] = set()
    current: list[tuple[int, int]] = []
    best: list[tuple[int, int]] = []

    def search(i: int) -> None:
        nonlocal best
        while i < len(order) and order[i] in used:
            i += 1
        if len(current) > len(best):
            best = list(current)
        if i == len(order):
            return
        undecided = sum(1 for v in order[i:] if v not in used)
        if len(current) + undecided // 2 <= len(best):
            return
        v = order[i]
        for w in g.neighbors(v):
            if w > v and w not in used:
                used.update((v, w))
                current.append((v, w))
                search(i + 1)
                current.pop()
                used.difference_update((v, w))
        used.add(v)
        search(i + 1)
        used.discard(v)

    search(0)
    logger.debug("Brute-force matching over %d edges found size %d", g.num_edges(), len(best))
    return Matching.of(best)


def mcm_augmenting_path(g: Graph) -> Matching:
    """Maximum-cardinality matching by Edmonds' blossom algorithm."""
    mates = nx.max_weight_matching(g.to_networkx(), maxcardinality=True)
    return Matching.of(mates)
