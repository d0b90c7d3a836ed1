"""Maximal matching, the iterated matching approximation and its instrumentation."""
import logging
from collections.abc import Mapping, Sequence

from src.app.core.engine.simulator import round_count, run_sync
from src.app.core.exceptions import (
    CyclicForestError,
    DegreeBoundError,
    IncompleteTraceError,
    InvalidMatchingError,
    SimulationError,
)
from src.app.core.graph.oracles import max_degree
from src.app.core.programs.factory import ProgramFactory
from src.app.core.programs.forest_coloring import higher_neighbors
from src.app.core.programs.maximal_matching import NO_PARTNER
from src.app.core.settings import SimulatorSettings
from src.app.models.graph import Graph
from src.app.models.matching import (
    ApproxConfig,
    ApproxResult,
    ApproxTrace,
    ForestDecomposition,
    IterationRecord,
    Matching,
)
from src.app.models.trace import ModelContext, Trace
from src.app.services.placement_service import backup_placement_run, selected_subgraph

logger = logging.getLogger(__name__)


def forest_decomposition(g: Graph) -> ForestDecomposition:
    """Split the edges into forests by each node's rank of its higher neighbors.

    Only non-empty forests are returned, so there are as many forests as the
    largest number of higher neighbors of any node.
    """
    forests: list[dict[int, int]] = []
    for v in g.nodes:
        for i, parent in enumerate(higher_neighbors(v, g.neighbors(v))):
            if i == len(forests):
                forests.append({})
            forests[i][v] = parent
    return ForestDecomposition(forests=forests)


def _check_forest(g: Graph, forest: Mapping[int, int]) -> None:
    for child, parent in forest.items():
        if not g.has_edge(child, parent):
            raise CyclicForestError(f"{child}->{parent} is not an edge of the graph")
    state: dict[int, int] = {}
    for start in forest:
        path = []
        v = start
        while v in forest and state.get(v) is None:
            state[v] = 1
            path.append(v)
            v = forest[v]
        if state.get(v) == 1:
            raise CyclicForestError(f"parent map has a cycle through node {v}")
        for u in path:
            state[u] = 2


def color_forests(
    g: Graph,
    forests: Sequence[Mapping[int, int]],
    id_bound: int | None = None,
    settings: SimulatorSettings | None = None,
) -> tuple[ForestDecomposition, Trace]:
    """3-color several forests of ``g`` in parallel.

    Raises:
        CyclicForestError: If a parent map is not a rooted forest of ``g``.
        ValueError: If ``id_bound`` is below the largest node ID.
    """
    for forest in forests:
        _check_forest(g, forest)
    bound = g.max_id if id_bound is None else id_bound
    if bound < g.max_id:
        raise ValueError(f"id_bound {bound} is below the largest node ID {g.max_id}")
    context = ModelContext(id_bound=bound, degree_bound=len(forests))
    program = ProgramFactory.create("forest-coloring", forests=forests)
    trace = run_sync(g, program, context=context, settings=settings)
    colors = [{v: trace.outputs[v][i] for v in g.nodes} for i in range(len(forests))]
    return ForestDecomposition(forests=[dict(f) for f in forests], colors=colors), trace


def three_color_forest(g: Graph, f: Mapping[int, int], id_bound: int) -> dict[int, int]:
    """Proper coloring of the forest ``f`` with colors 1..3."""
    decomposition, _ = color_forests(g, [f], id_bound)
    return decomposition.colors[0]


def _matching_from_partners(outputs: Mapping[int, int]) -> Matching:
    edges = []
    for v, partner in outputs.items():
        if partner == NO_PARTNER:
            continue
        if outputs.get(partner) != v:
            raise SimulationError(f"node {v} claims partner {partner}, which does not agree")
        if v < partner:
            edges.append((v, partner))
    return Matching.of(edges)


def maximal_matching_run(
    g: Graph,
    degree_bound: int | None = None,
    id_bound: int | None = None,
    settings: SimulatorSettings | None = None,
) -> tuple[Matching, Trace]:
    """Run the forest matching program and return the matching with its trace.

    Args:
        g: The graph.
        degree_bound: Number of forests scheduled; defaults to the max degree.
        id_bound: Upper bound on node IDs; defaults to the largest ID.
        settings: Optional simulator settings.

    Raises:
        DegreeBoundError: If a node has more higher neighbors than ``degree_bound``.
    """
    context = ModelContext(
        id_bound=g.max_id if id_bound is None else max(id_bound, g.max_id),
        degree_bound=max_degree(g) if degree_bound is None else degree_bound,
    )
    trace = run_sync(g, ProgramFactory.create("forest-matching"), context=context, settings=settings)
    if not trace.complete:
        raise IncompleteTraceError(f"maximal matching did not finish in {trace.rounds_executed} rounds")
    return _matching_from_partners(trace.outputs), trace


def maximal_matching_pr(g: Graph) -> Matching:
    matching, _ = maximal_matching_run(g)
    return matching


def is_maximal_matching(g: Graph, m: Matching) -> bool:
    """True iff no edge of ``g`` has both endpoints unmatched.

    Raises:
        InvalidMatchingError: If an edge of ``m`` is not an edge of ``g``.
    """
    for u, v in m.edges:
        if not g.has_edge(u, v):
            raise InvalidMatchingError(f"{u}-{v} is not an edge of the graph")
    matched = m.matched_nodes()
    return all(u in matched or v in matched for u, v in g.edges())


def bp_mm_once(g: Graph, c: int | None = None) -> Matching:
    """Maximal matching of the selected subgraph of one backup placement.

    Isolated vertices are skipped. With ``c`` given, the matching program is
    scheduled for degree ``c + 1``.
    """
    placement, _ = backup_placement_run(g, strict=False)
    selected = selected_subgraph(g.without_isolated(), placement)
    matching, _ = maximal_matching_run(
        selected, degree_bound=None if c is None else c + 1, id_bound=g.max_id
    )
    return matching


def run_mcm_approx(
    g: Graph,
    cfg: ApproxConfig,
    instrument: bool = True,
    settings: SimulatorSettings | None = None,
) -> ApproxResult:
    """Iterated backup placement plus maximal matching.

    Each iteration matches the selected subgraph of the remaining graph, then
    removes matched vertices, their edges and newly isolated vertices. The
    loop ends after ``cfg.k`` iterations or once the graph is empty.

    Raises:
        DegreeBoundError: If a selected subgraph has degree above ``cfg.c + 1``.
    """
    remaining = g.without_isolated()
    trace = ApproxTrace(n=remaining.n)
    accumulated = Matching()

    for iteration in range(1, cfg.k + 1):
        if remaining.n == 0:
            logger.debug("graph empty after %d iterations", iteration - 1)
            break
        placement, bp_trace = backup_placement_run(remaining, settings=settings)
        selected = selected_subgraph(remaining, placement)
        degree = max_degree(selected)
        if degree > cfg.c + 1:
            raise DegreeBoundError(
                f"selected subgraph has degree {degree} > c + 1 = {cfg.c + 1}; "
                f"c={cfg.c} is below the neighborhood independence"
            )
        matched, mm_trace = maximal_matching_run(
            selected, degree_bound=cfg.c + 1, id_bound=g.max_id, settings=settings
        )
        accumulated = accumulated.union(matched)
        before = remaining.n
        remaining = remaining.without_nodes(matched.matched_nodes()).without_isolated()
        record = IterationRecord(
            iteration=iteration,
            vertices_before=before,
            vertices_after=remaining.n,
            matched_edges=matched.size,
            bp_rounds=round_count(bp_trace),
            mm_rounds=round_count(mm_trace),
        )
        trace.iterations.append(record)
        logger.debug(
            "iteration %d: matched %d edges, %d -> %d vertices",
            iteration,
            matched.size,
            before,
            remaining.n,
        )

    logger.info(
        "approximation: n=%d k=%d matching=%d rounds=%d",
        trace.n,
        cfg.k,
        accumulated.size,
        trace.total_rounds,
    )
    return ApproxResult(matching=accumulated, config=cfg, trace=trace if instrument else None)


def mcm_approx(g: Graph, cfg: ApproxConfig) -> Matching:
    return run_mcm_approx(g, cfg, instrument=False).matching


def residual_fraction(trace: ApproxTrace | None, i: int) -> float:
    """Fraction of the initial vertices still present after iteration ``i``.

    Iterations skipped because the graph was already empty count as 0.0.

    Raises:
        IncompleteTraceError: If the run was not instrumented.
    """
    if trace is None:
        raise IncompleteTraceError("residual fractions need an instrumented approximation run")
    if i < 0:
        raise ValueError("iteration index must be non-negative")
    residuals = trace.residuals()
    return residuals[i] if i < len(residuals) else residuals[-1]


def approx_record(result: ApproxResult, mcm_size: int | None = None) -> dict:
    """JSON experiment record of an instrumented approximation run."""
    trace = result.trace or ApproxTrace(n=0)
    size = result.matching.size
    record = {
        "n": trace.n,
        "c": result.config.c,
        "epsilon": result.config.epsilon,
        "k": result.config.k,
        "matching_size": size,
        "rounds": trace.total_rounds,
        "residual": trace.residuals()[1:],
    }
    if mcm_size is not None:
        record["mcm_size"] = mcm_size
        record["ratio"] = mcm_size / size if size else 1.0
    return record
