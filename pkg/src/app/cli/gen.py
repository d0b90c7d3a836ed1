"""``gen``: write a generated graph as an edge list."""
import argparse
import logging

from src.app.cli.common import add_family_arguments, family_params
from src.app.models.experiment import ExitCode
from src.app.repositories.graph_repository import format_edge_list
from src.app.repositories.results_repository import get_results_repository
from src.app.services.experiment_orchestrator import build_graph

logger = logging.getLogger(__name__)


def register(subparsers) -> None:
    parser = subparsers.add_parser("gen", help="Generate a graph")
    add_family_arguments(parser, required=True)
    parser.add_argument("--out", help="Output path; stdout when omitted")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    params = family_params(args)
    graph = build_graph(params)
    logger.info("generated %s: n=%d m=%d", params.family.value, graph.n, graph.num_edges())
    get_results_repository().write(format_edge_list(graph), args.out)
    return ExitCode.OK
