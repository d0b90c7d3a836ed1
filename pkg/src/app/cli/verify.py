"""``verify``: bundled bound checks on one graph."""
import argparse
import logging

from src.app.cli.common import add_graph_arguments, resolve_graph
from src.app.repositories.results_repository import get_results_repository, to_json
from src.app.services.experiment_orchestrator import get_orchestrator

logger = logging.getLogger(__name__)


def register(subparsers) -> None:
    parser = subparsers.add_parser("verify", help="Check load, degree and ratio bounds")
    add_graph_arguments(parser)
    parser.add_argument("--c", type=int, help="Independence bound; computed exactly when omitted")
    parser.add_argument("--placement", help="Placement file ('v -> w' lines) to check instead of computing one")
    parser.add_argument(
        "--samples",
        type=int,
        default=32,
        help="Neighborhoods sampled for a lower bound when the exact oracle is skipped",
    )
    parser.add_argument("--out", help="Output path; stdout when omitted")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    graph, params = resolve_graph(args)
    repo = get_results_repository()
    placement = repo.load_placement(args.placement) if args.placement else None
    source = args.graph or params.family.value
    report = get_orchestrator().verify(
        graph, c=args.c, placement=placement, source=source, samples=args.samples, seed=args.seed
    )
    for name in report.failed:
        logger.error("bound violated: %s", name)
    repo.write(to_json(report), args.out)
    return report.exit_code
