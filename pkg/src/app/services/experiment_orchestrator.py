"""Experiment orchestrator tying generators, algorithms and oracles together."""
import asyncio
import logging
import math
from collections.abc import Iterable

from src.app.core.engine.simulator import round_count
from src.app.core.exceptions import InvalidPlacementError, OracleInfeasibleError
from src.app.core.graph.generators import generate
from src.app.core.graph.oracles import (
    family_independence_bound,
    max_degree,
    mcm_augmenting_path,
    mcm_brute_force,
    neighborhood_independence,
    neighborhood_independence_sampled,
)
from src.app.core.settings import SimulatorSettings, get_settings
from src.app.models.experiment import BenchRow, ExperimentSpec, VerifyReport
from src.app.models.graph import Graph, GraphFamily, GraphFamilyParams
from src.app.models.matching import ApproxConfig
from src.app.models.placement import Placement
from src.app.repositories.graph_repository import load_graph
from src.app.services.matching_service import bp_mm_once, maximal_matching_run, run_mcm_approx
from src.app.services.placement_service import (
    backup_placement_run,
    placement_load,
    selected_subgraph,
    validate_placement,
)

logger = logging.getLogger(__name__)


def default_radius(n: int, dimension: int = 2) -> float:
    """Radius giving an expected degree of about 8 away from the boundary."""
    if dimension == 2:
        return math.sqrt(8 / (math.pi * n))
    return (6 / (math.pi * n)) ** (1 / 3)


def build_graph(params: GraphFamilyParams) -> Graph:
    if params.family == GraphFamily.EXPLICIT_FILE:
        return load_graph(params.path)
    return generate(params)


def resolve_c(g: Graph, c: int | None = None, params: GraphFamilyParams | None = None) -> tuple[int, str]:
    """Pick the independence bound used for a graph.

    Order: explicit ``c``, the exact oracle, the family's known bound, the max degree.

    Returns:
        The bound (at least 1) and where it came from.
    """
    if c is not None:
        return c, "explicit"
    try:
        return max(1, neighborhood_independence(g)), "oracle"
    except OracleInfeasibleError as e:
        logger.warning("%s", e)
    if params is not None:
        bound = family_independence_bound(params.family, params.dimension)
        if bound is not None:
            return bound, "family"
    return max(1, max_degree(g)), "max-degree"


class ExperimentOrchestrator:
    """Runs verification bundles and benchmark sweeps."""

    def __init__(self, settings: SimulatorSettings | None = None):
        """Initialize the experiment orchestrator.

        Args:
            settings: Optional settings. Uses the global settings if not provided.
        """
        self._settings = settings or get_settings()

    def verify(
        self,
        g: Graph,
        c: int | None = None,
        placement: Placement | None = None,
        source: str | None = None,
        samples: int = 0,
        seed: int = 0,
    ) -> VerifyReport:
        """Check the placement load, selected-subgraph degree and matching ratio bounds.

        Args:
            g: The graph.
            c: Explicit independence bound; computed by the oracle when omitted.
            placement: A placement to check instead of computing one.
            source: Where the graph came from, for the report.
            samples: Neighborhoods to sample for a lower bound on the independence
                when the exact oracle is infeasible; 0 disables sampling.
            seed: Seed of the neighborhood sample.

        Returns:
            The report; its ``exit_code`` is 0 iff every bound holds.
        """
        report = VerifyReport(graph={"n": g.n, "m": g.num_edges(), "source": source or "memory"})

        if c is None:
            try:
                c = neighborhood_independence(g, self._settings.independence_degree_guard)
            except OracleInfeasibleError as e:
                logger.warning("%s", e)
                for name in ("load-bound", "selected-degree-bound", "matching-ratio"):
                    report.skip(name, str(e))
                if samples > 0:
                    report.c_lower_bound = neighborhood_independence_sampled(g, samples, seed)
        report.c = c

        if placement is None:
            placement, trace = backup_placement_run(g, strict=False, settings=self._settings)
            rounds = round_count(trace)
            report.add("one-round", rounds == 1, measured=rounds, bound=1)
        try:
            validate_placement(g, placement)
        except InvalidPlacementError as e:
            report.add("placement-valid", False, detail=str(e))
            return report
        report.add("placement-valid", True)

        if c is None:
            return report

        load = placement_load(g, placement, c)
        report.add(
            "load-bound",
            load.holds,
            measured=load.max_load,
            bound=c,
            detail=f"violating nodes: {load.violating_nodes}" if load.violating_nodes else None,
        )
        degree = max_degree(selected_subgraph(g, placement))
        report.add("selected-degree-bound", degree <= c + 1, measured=degree, bound=c + 1)
        if degree > c + 1:
            report.skip("matching-ratio", "selected subgraph exceeds the degree bound")
            return report

        core = g.without_isolated()
        try:
            mcm = mcm_brute_force(core, self._settings.mcm_edge_guard).size
        except OracleInfeasibleError as e:
            logger.warning("%s", e)
            report.skip("matching-ratio", str(e))
            return report
        size = bp_mm_once(g, c).size
        report.add("matching-ratio", size * (c + 1) >= mcm, measured=size, bound=mcm / (c + 1))
        report.add("matching-floor", 2 * (c + 1) * size >= core.n, measured=size, bound=core.n / (2 * (c + 1)))
        return report

    def bench_instance(self, spec: ExperimentSpec) -> BenchRow:
        """Run every algorithm on one generated instance."""
        g = build_graph(spec.graph)
        c, _ = resolve_c(g, spec.c, spec.graph)
        epsilon = spec.epsilon or self._settings.default_epsilon

        placement, bp_trace = backup_placement_run(g, strict=False, settings=self._settings)
        core = g.without_isolated()
        selected = selected_subgraph(core, placement)
        bp_mm, mm_trace = maximal_matching_run(
            selected, degree_bound=c + 1, id_bound=g.max_id, settings=self._settings
        )
        cfg = ApproxConfig(epsilon=epsilon, c=c, k=spec.k, enforce_bound=spec.k is None)
        result = run_mcm_approx(g, cfg, settings=self._settings)

        mcm_size = mcm_augmenting_path(core).size if spec.oracle else None
        size = result.matching.size
        ratio = None
        if mcm_size is not None:
            ratio = mcm_size / size if size else 1.0

        row = BenchRow(
            family=spec.graph.family.value,
            n=g.n,
            seed=spec.graph.seed,
            c=c,
            max_degree=max_degree(g),
            bp_rounds=round_count(bp_trace),
            mm_rounds=round_count(mm_trace),
            approx_rounds=result.trace.total_rounds,
            bp_mm_size=bp_mm.size,
            approx_size=size,
            mcm_size=mcm_size,
            ratio=ratio,
            residual=result.trace.residuals()[1:],
        )
        logger.info("bench %s n=%d seed=%d: approx=%d rounds=%d", row.family, row.n, row.seed, size, row.approx_rounds)
        return row

    async def _run_one(self, spec: ExperimentSpec, semaphore: asyncio.Semaphore) -> BenchRow:
        async with semaphore:
            return await asyncio.to_thread(self.bench_instance, spec)

    async def run_sweep(self, specs: Iterable[ExperimentSpec]) -> list[BenchRow]:
        """Run instances concurrently and return rows sorted by (family, n, seed)."""
        semaphore = asyncio.Semaphore(self._settings.sweep_workers)
        rows = await asyncio.gather(*(self._run_one(spec, semaphore) for spec in specs))
        return sorted(rows, key=lambda row: row.sort_key)


def sweep_specs(
    family: GraphFamily,
    sizes: Iterable[int],
    seed: int,
    repeats: int,
    radius: float | None = None,
    p: float | None = None,
    dimension: int = 3,
    epsilon: float | None = None,
    c: int | None = None,
    k: int | None = None,
) -> list[ExperimentSpec]:
    """Specs for every size and ``repeats`` consecutive seeds starting at ``seed``."""
    specs = []
    for n in sizes:
        for s in range(seed, seed + repeats):
            params = GraphFamilyParams(
                family=family,
                n=n,
                seed=s,
                dimension=dimension,
                radius=(radius or default_radius(n, 2 if family == GraphFamily.UNIT_DISK else dimension))
                if family in (GraphFamily.UNIT_DISK, GraphFamily.UNIT_BALL)
                else None,
                p=(p if p is not None else min(1.0, 8 / n))
                if family in (GraphFamily.RANDOM_GNP, GraphFamily.LINE_GRAPH)
                else None,
            )
            specs.append(ExperimentSpec(command="bench", graph=params, epsilon=epsilon, c=c, k=k))
    return specs


_orchestrator: ExperimentOrchestrator | None = None


def get_orchestrator() -> ExperimentOrchestrator:
    """Get the global experiment orchestrator instance."""
    global _orchestrator
    if _orchestrator is None:
        _orchestrator = ExperimentOrchestrator()
    return _orchestrator
