"""``approx``: iterated (2 + epsilon)-approximate maximum matching."""
import argparse

from src.app.cli.common import add_graph_arguments, add_output_arguments, resolve_graph
from src.app.core.graph.oracles import mcm_augmenting_path
from src.app.core.settings import get_settings
from src.app.models.experiment import ExitCode
from src.app.models.matching import ApproxConfig
from src.app.repositories.results_repository import get_results_repository, to_json
from src.app.services.experiment_orchestrator import resolve_c
from src.app.services.matching_service import approx_record, run_mcm_approx


def register(subparsers) -> None:
    parser = subparsers.add_parser("approx", help="Approximate a maximum matching")
    add_graph_arguments(parser)
    add_output_arguments(parser, ["json", "text"], "json")
    parser.add_argument("--epsilon", type=float, help="Approximation slack")
    parser.add_argument("--c", type=int, help="Neighborhood independence bound")
    parser.add_argument("--k", type=int, help="Iteration count; may go below the derived value")
    parser.add_argument("--oracle", action="store_true", help="Compare against an exact maximum matching")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    graph, params = resolve_graph(args)
    c, _ = resolve_c(graph, args.c, params)
    cfg = ApproxConfig(
        epsilon=args.epsilon or get_settings().default_epsilon,
        c=c,
        k=args.k,
        enforce_bound=args.k is None,
    )
    result = run_mcm_approx(graph, cfg)
    mcm_size = mcm_augmenting_path(graph).size if args.oracle else None

    repo = get_results_repository()
    if args.format == "text":
        repo.write(repo.matching_text(result.matching), args.out)
    else:
        repo.write(to_json(approx_record(result, mcm_size)), args.out)

    if mcm_size is not None and result.matching.size * cfg.ratio_bound < mcm_size:
        return ExitCode.BOUND_VIOLATED
    return ExitCode.OK
