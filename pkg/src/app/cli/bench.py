"""``bench``: sweep a family over sizes and seeds."""
import argparse
import asyncio

from src.app.cli.common import FAMILIES
from src.app.models.experiment import ExitCode
from src.app.models.graph import GraphFamily
from src.app.repositories.results_repository import get_results_repository
from src.app.services.experiment_orchestrator import get_orchestrator, sweep_specs


def register(subparsers) -> None:
    parser = subparsers.add_parser("bench", help="Benchmark rounds and ratios over a sweep")
    parser.add_argument("--family", choices=FAMILIES, default=GraphFamily.UNIT_DISK.value)
    parser.add_argument("--sizes", type=int, nargs="*", default=[32, 64, 128], help="Values of n")
    parser.add_argument("--seed", type=int, default=0, help="First seed")
    parser.add_argument("--repeats", type=int, default=1, help="Consecutive seeds per size")
    parser.add_argument("--radius", type=float)
    parser.add_argument("--p", type=float)
    parser.add_argument("--dimension", type=int, default=3)
    parser.add_argument("--epsilon", type=float)
    parser.add_argument("--c", type=int)
    parser.add_argument("--k", type=int)
    parser.add_argument("--no-oracle", action="store_true", help="Skip the exact maximum matching")
    parser.add_argument("--out", help="Output path; stdout when omitted")
    parser.add_argument("--format", choices=["csv", "json"], default="csv")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    specs = sweep_specs(
        GraphFamily(args.family),
        args.sizes,
        seed=args.seed,
        repeats=args.repeats,
        radius=args.radius,
        p=args.p,
        dimension=args.dimension,
        epsilon=args.epsilon,
        c=args.c,
        k=args.k,
    )
    for spec in specs:
        spec.oracle = not args.no_oracle
    rows = asyncio.run(get_orchestrator().run_sweep(specs))

    repo = get_results_repository()
    text = repo.bench_csv(rows) if args.format == "csv" else repo.bench_json(rows)
    repo.write(text, args.out)
    bound_ok = all(row.bp_rounds == 1 for row in rows)
    return ExitCode.OK if bound_ok else ExitCode.BOUND_VIOLATED
