"""``match``: deterministic maximal matching."""
import argparse

from src.app.cli.common import add_graph_arguments, add_output_arguments, resolve_graph
from src.app.core.engine.simulator import round_count
from src.app.models.experiment import ExitCode
from src.app.repositories.results_repository import get_results_repository, to_json
from src.app.services.matching_service import is_maximal_matching, maximal_matching_run


def register(subparsers) -> None:
    parser = subparsers.add_parser("match", help="Compute a maximal matching")
    add_graph_arguments(parser)
    add_output_arguments(parser, ["text", "json"], "text")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    graph, _ = resolve_graph(args)
    matching, trace = maximal_matching_run(graph)
    repo = get_results_repository()
    if args.format == "text":
        repo.write(repo.matching_text(matching), args.out)
    else:
        repo.write(
            to_json(
                {
                    "matching": [list(edge) for edge in matching.edges],
                    "matching_size": matching.size,
                    "rounds": round_count(trace),
                }
            ),
            args.out,
        )
    return ExitCode.OK if is_maximal_matching(graph, matching) else ExitCode.BOUND_VIOLATED
