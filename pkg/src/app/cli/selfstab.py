"""``selfstab``: RAM-corruption experiment for the self-stabilizing placement."""
import argparse
import logging

from src.app.cli.common import add_graph_arguments, resolve_graph
from src.app.core.programs.factory import ProgramFactory
from src.app.models.experiment import ExitCode
from src.app.models.stabilization import FaultMode
from src.app.repositories.results_repository import get_results_repository, to_json
from src.app.services.experiment_orchestrator import resolve_c
from src.app.services.stabilization_service import (
    run_self_stab_bp,
    run_self_stab_composed,
    single_fault,
)

logger = logging.getLogger(__name__)


def register(subparsers) -> None:
    parser = subparsers.add_parser("selfstab", help="Measure stabilization after RAM faults")
    add_graph_arguments(parser)
    parser.add_argument("--faults", help="Fault schedule JSON; defaults to corrupting every node once")
    parser.add_argument("--fault-round", type=int, default=5, help="Round of the default fault")
    parser.add_argument(
        "--mode", choices=[m.value for m in FaultMode], default=FaultMode.RANDOM_BYTES.value
    )
    parser.add_argument("--rounds", type=int, default=10, help="Total rounds to simulate")
    parser.add_argument("--c", type=int, help="Load bound of the legality predicate")
    parser.add_argument(
        "--payload", choices=ProgramFactory.list_payloads(), help="Compose the placement with a payload"
    )
    parser.add_argument("--out", help="Output path; stdout when omitted")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    graph, params = resolve_graph(args)
    repo = get_results_repository()
    if args.faults:
        faults = repo.load_fault_schedule(args.faults)
    else:
        faults = single_fault(args.fault_round, FaultMode(args.mode), seed=args.seed)
    c, _ = resolve_c(graph, args.c, params)

    if args.payload:
        report = run_self_stab_composed(
            graph, ProgramFactory.create_payload(args.payload), faults, args.rounds, c_bound=c
        )
        ok = report.within_bound and report.stayed_legal and report.selection_constant
    else:
        report = run_self_stab_bp(graph, faults, args.rounds, c_bound=c)
        ok = report.stabilization_time == 1 and report.stayed_legal

    logger.info("%s: stabilization time %s", report.program, report.stabilization_time)
    repo.write(to_json(report), args.out)
    return ExitCode.OK if ok else ExitCode.BOUND_VIOLATED
