"""``bp``: one-round backup placement and its load report."""
import argparse
import logging

from src.app.cli.common import add_graph_arguments, add_output_arguments, resolve_graph
from src.app.models.experiment import ExitCode
from src.app.repositories.results_repository import get_results_repository, to_json
from src.app.services.placement_service import placement_load, run_backup_placement

logger = logging.getLogger(__name__)


def register(subparsers) -> None:
    parser = subparsers.add_parser("bp", help="Run the backup placement")
    add_graph_arguments(parser)
    add_output_arguments(parser, ["text", "json"], "text")
    parser.add_argument("--c", type=int, help="Load bound; the JSON report flags nodes above it")
    parser.add_argument("--lenient", action="store_true", help="Skip isolated vertices instead of failing")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    graph, _ = resolve_graph(args)
    placement = run_backup_placement(graph, strict=not args.lenient)
    repo = get_results_repository()
    if args.format == "text":
        repo.write(repo.placement_text(placement), args.out)
        return ExitCode.OK

    c_bound = args.c if args.c is not None else graph.n
    load = placement_load(graph, placement, c_bound)
    logger.info("placement: %d selections, max load %d", len(placement.selection), load.max_load)
    payload = {
        "placement": {str(v): w for v, w in placement.selection.items()},
        "isolated": placement.isolated,
        "load": load.to_json_dict(),
    }
    repo.write(to_json(payload), args.out)
    return ExitCode.OK if load.holds else ExitCode.BOUND_VIOLATED
