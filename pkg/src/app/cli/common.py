"""Arguments and helpers shared by the sub-commands."""
import argparse

from src.app.core.exceptions import SimulationError
from src.app.models.graph import Graph, GraphFamily, GraphFamilyParams
from src.app.repositories.graph_repository import load_graph
from src.app.services.experiment_orchestrator import build_graph, default_radius

FAMILIES = [f.value for f in GraphFamily if f != GraphFamily.EXPLICIT_FILE]


def add_family_arguments(parser: argparse.ArgumentParser, required: bool = False) -> None:
    parser.add_argument("--family", choices=FAMILIES, required=required, help="Graph family to generate")
    parser.add_argument("--n", type=int, default=32, help="Number of nodes (base nodes for line graphs)")
    parser.add_argument("--radius", type=float, help="Connection radius for geometric families")
    parser.add_argument("--p", type=float, help="Edge probability for random-gnp and line-graph bases")
    parser.add_argument("--dimension", type=int, default=3, help="Dimension for unit-ball graphs")
    parser.add_argument("--seed", type=int, default=0, help="Generator seed")


def add_graph_arguments(parser: argparse.ArgumentParser) -> None:
    """``--graph FILE`` or a generated family."""
    parser.add_argument("--graph", help="Edge-list file")
    add_family_arguments(parser)


def add_output_arguments(parser: argparse.ArgumentParser, formats: list[str], default: str) -> None:
    parser.add_argument("--out", help="Output path; stdout when omitted")
    parser.add_argument("--format", choices=formats, default=default, help="Output format")


def family_params(args: argparse.Namespace) -> GraphFamilyParams:
    """Generator parameters from the command line, filling family defaults."""
    family = GraphFamily(args.family)
    radius = args.radius
    if radius is None and family in (GraphFamily.UNIT_DISK, GraphFamily.UNIT_BALL):
        radius = default_radius(args.n, 2 if family == GraphFamily.UNIT_DISK else args.dimension)
    p = args.p
    if p is None and family in (GraphFamily.RANDOM_GNP, GraphFamily.LINE_GRAPH):
        p = min(1.0, 8 / args.n)
    return GraphFamilyParams(
        family=family, n=args.n, radius=radius, p=p, seed=args.seed, dimension=args.dimension
    )


def resolve_graph(args: argparse.Namespace) -> tuple[Graph, GraphFamilyParams | None]:
    """Load ``--graph`` or generate ``--family``.

    Raises:
        SimulationError: If neither or both sources were given.
    """
    if bool(args.graph) == bool(args.family):
        raise SimulationError("give exactly one of --graph FILE or --family NAME")
    if args.graph:
        return load_graph(args.graph), None
    params = family_params(args)
    return build_graph(params), params
