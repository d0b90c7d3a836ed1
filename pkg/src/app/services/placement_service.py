"""Backup placement: running the one-round program and checking its load."""
import logging
from collections import Counter
from collections.abc import Mapping

from src.app.core.engine.simulator import run_sync
from src.app.core.exceptions import InvalidPlacementError, IsolatedVertexError
from src.app.core.programs.factory import ProgramFactory
from src.app.core.settings import SimulatorSettings
from src.app.models.graph import Graph
from src.app.models.placement import LoadReport, Placement
from src.app.models.trace import Trace

logger = logging.getLogger(__name__)


def backup_placement_run(
    g: Graph, strict: bool = True, settings: SimulatorSettings | None = None
) -> tuple[Placement, Trace]:
    """Run the backup placement program and return the placement with its trace.

    Args:
        g: The graph.
        strict: Reject isolated vertices instead of skipping them.
        settings: Optional simulator settings.

    Raises:
        IsolatedVertexError: In strict mode, if ``g`` has isolated vertices.
    """
    isolated = g.isolated_nodes()
    if isolated:
        if strict:
            raise IsolatedVertexError(
                f"isolated vertices cannot select a backup: {isolated}", isolated
            )
        logger.warning("skipping %d isolated vertices: %s", len(isolated), isolated)
        g = g.without_isolated()
    trace = run_sync(g, ProgramFactory.create("backup-placement"), max_rounds=1, settings=settings)
    return Placement(selection=dict(sorted(trace.outputs.items())), isolated=isolated), trace


def run_backup_placement(g: Graph, strict: bool = True) -> Placement:
    """Every node selects ``next_modulo`` of its neighborhood."""
    placement, _ = backup_placement_run(g, strict=strict)
    return placement


def validate_placement(g: Graph, p: Placement) -> None:
    """Check that ``p`` is a placement of ``g``.

    Raises:
        InvalidPlacementError: If a non-isolated node is missing, a key is not a
            node, or a selection is not a neighbor.
    """
    for v, w in p.selection.items():
        if v not in g.adjacency:
            raise InvalidPlacementError(f"{v} is not a node of the graph")
        if not g.has_edge(v, w):
            raise InvalidPlacementError(f"node {v} selects {w}, which is not a neighbor")
    missing = [v for v in g.nodes if g.degree(v) and v not in p.selection]
    if missing:
        raise InvalidPlacementError(f"nodes without a selection: {missing}")


def placement_load(g: Graph, p: Placement, c_bound: int) -> LoadReport:
    """Tally how many neighbors select each node and compare against ``c_bound``."""
    counts = Counter(p.selection.values())
    in_load = {v: counts.get(v, 0) for v in g.nodes}
    violating = [v for v, load in in_load.items() if load > c_bound]
    return LoadReport(
        in_load=in_load,
        max_load=max(in_load.values(), default=0),
        c_bound=c_bound,
        violating_nodes=violating,
        histogram=dict(sorted(Counter(in_load.values()).items())),
        isolated_nodes=list(p.isolated),
    )


def selected_subgraph(g: Graph, p: Placement) -> Graph:
    """The graph on ``g``'s nodes whose edges are exactly the selections."""
    validate_placement(g, p)
    return g.edge_subgraph(p.edges())


def relabel_placement(p: Placement, mapping: Mapping[int, int]) -> Placement:
    return Placement(
        selection={mapping[v]: mapping[w] for v, w in sorted(p.selection.items())},
        isolated=sorted(mapping[v] for v in p.isolated),
    )
