"""Edge-list graph files: one ``u v`` pair or a single isolated ``v`` per line."""
import logging
from pathlib import Path

from src.app.core.exceptions import GraphParseError
from src.app.models.graph import Graph

logger = logging.getLogger(__name__)


def _parse_id(token: str, line_number: int) -> int:
    try:
        value = int(token)
    except ValueError:
        raise GraphParseError(f"non-integer token {token!r} at line {line_number}", line_number)
    if value < 0:
        raise GraphParseError(f"negative node ID {value} at line {line_number}", line_number)
    return value


def parse_edge_list(text: str) -> Graph:
    """Parse edge-list text into a Graph.

    Lines starting with ``#`` and blank lines are skipped. Duplicate edges
    collapse.

    Raises:
        GraphParseError: On a malformed line, naming its 1-based number.
    """
    nodes: list[int] = []
    edges: list[tuple[int, int]] = []
    for line_number, raw in enumerate(text.split("\n"), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) == 1:
            nodes.append(_parse_id(tokens[0], line_number))
        elif len(tokens) == 2:
            u, v = (_parse_id(token, line_number) for token in tokens)
            if u == v:
                raise GraphParseError(f"self-loop at line {line_number}", line_number)
            edges.append((u, v))
        else:
            raise GraphParseError(
                f"expected 1 or 2 tokens, got {len(tokens)} at line {line_number}", line_number
            )
    return Graph.from_edges(edges, nodes=nodes)


def load_graph(path: str | Path) -> Graph:
    """Read a graph from an edge-list file."""
    graph = parse_edge_list(Path(path).read_text(encoding="utf-8"))
    logger.info("loaded %s: n=%d m=%d", path, graph.n, graph.num_edges())
    return graph


def format_edge_list(graph: Graph) -> str:
    """Canonical edge-list text: edges in order, then isolated nodes."""
    lines = [f"{u} {v}" for u, v in graph.edges()]
    lines.extend(str(v) for v in graph.isolated_nodes())
    return "".join(f"{line}\n" for line in lines)


def save_graph(graph: Graph, path: str | Path) -> None:
    """Write ``graph`` so that ``load_graph`` reads it back unchanged."""
    Path(path).write_text(format_edge_list(graph), encoding="utf-8")
