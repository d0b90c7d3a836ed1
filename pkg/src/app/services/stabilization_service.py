"""Self-stabilization harness: fault injection, legality tracking and reports."""
import logging
from collections import Counter
from collections.abc import Callable, Iterable, Mapping
from dataclasses import replace
from typing import Any

import numpy as np

from src.app.core.engine.base import NodeProgram
from src.app.core.engine.simulator import SyncSimulator, state_digest
from src.app.core.exceptions import OracleInfeasibleError, UnstabilizedError
from src.app.core.graph.oracles import max_degree, neighborhood_independence
from src.app.core.programs.backup_placement import next_modulo
from src.app.core.programs.factory import ProgramFactory
from src.app.core.programs.self_stabilizing import (
    PayloadProgram,
    StabNodeState,
    compose_bp_then,
    encode_selection,
)
from src.app.core.settings import SimulatorSettings
from src.app.models.graph import Graph
from src.app.models.stabilization import ComposedReport, FaultEvent, FaultMode, FaultSchedule, StabReport

logger = logging.getLogger(__name__)

Legality = Callable[[Mapping[int, StabNodeState]], bool]

_MAX_GARBAGE = 8


def corrupt_state(
    state: StabNodeState, mode: FaultMode, rng: np.random.Generator, program: NodeProgram
) -> StabNodeState:
    """Overwrite the RAM of one node; ROM is left untouched."""
    corrupt_payload = getattr(program, "corrupt_payload", None)
    payload = corrupt_payload(state.payload, rng) if corrupt_payload else state.payload
    if mode == FaultMode.RANDOM_BYTES:
        ram = rng.bytes(int(rng.integers(0, _MAX_GARBAGE + 1)))
    else:
        correct = next_modulo(state.rom, state.ports)
        wrong = [w for w in state.ports if w != correct]
        ram = encode_selection(int(wrong[rng.integers(len(wrong))]) if wrong else state.rom)
    return replace(state, ram=ram, payload=payload)


def selection_map(states: Mapping[int, StabNodeState]) -> dict[int, int | None]:
    return {v: state.selection for v, state in sorted(states.items())}


def placement_legality(g: Graph, c_bound: int) -> Legality:
    """Every RAM holds a neighbor and no node is selected more than ``c_bound`` times."""

    def legal(states: Mapping[int, StabNodeState]) -> bool:
        selections = selection_map(states)
        for v, w in selections.items():
            if w is None or not g.has_edge(v, w):
                return False
        return max(Counter(selections.values()).values(), default=0) <= c_bound

    return legal


def selected_views(states: Mapping[int, StabNodeState]) -> dict[int, tuple[int, ...]]:
    """Neighborhoods of the selected subgraph encoded in the RAM selections."""
    views: dict[int, set[int]] = {v: set() for v in states}
    for v, w in selection_map(states).items():
        if w is not None and w in views:
            views[v].add(w)
            views[w].add(v)
    return {v: tuple(sorted(ws)) for v, ws in views.items()}


def composed_legality(g: Graph, c_bound: int, payload: PayloadProgram) -> Legality:
    """Placement legality plus a legal payload state on the true selected subgraph."""
    placement_ok = placement_legality(g, c_bound)

    def legal(states: Mapping[int, StabNodeState]) -> bool:
        if not placement_ok(states):
            return False
        views = selected_views(states)
        return all(payload.legal(state.payload, views[v]) for v, state in states.items())

    return legal


def _selection_digest(states: Mapping[int, StabNodeState]) -> str:
    return state_digest({str(v): state.ram.hex() for v, state in sorted(states.items())})


def run_self_stab(
    g: Graph,
    program: NodeProgram,
    faults: FaultSchedule,
    total_rounds: int,
    legality: Legality,
    settings: SimulatorSettings | None = None,
) -> StabReport:
    """Run ``program`` for ``total_rounds`` rounds under the fault schedule.

    Faults of round ``r`` are applied after round ``r``'s step; legality is
    then evaluated on the resulting global state.

    Raises:
        ValueError: If ``total_rounds`` does not exceed the last fault round.
    """
    last_fault = faults.last_fault_round
    if total_rounds <= last_fault:
        raise ValueError(f"total_rounds {total_rounds} must exceed the last fault round {last_fault}")

    rng = np.random.default_rng(faults.seed)
    legal_rounds: list[bool] = []
    digests: list[str] = []

    def inject(round_index: int, states: dict[int, Any]) -> dict[int, Any]:
        for event in faults.events_at(round_index):
            victims = event.victims_in(list(states))
            logger.debug("round %d: %s on %d nodes", round_index, event.mode.value, len(victims))
            for v in victims:
                states[v] = corrupt_state(states[v], event.mode, rng, program)
        legal_rounds.append(legality(states))
        digests.append(_selection_digest(states))
        return states

    simulator = SyncSimulator(g, program, settings=settings)
    simulator.run(max_rounds=total_rounds, stop_when_done=False, round_hook=inject)

    stabilization_round = next(
        (r for r in range(last_fault + 1, total_rounds + 1) if legal_rounds[r - 1]), None
    )
    report = StabReport(
        program=program.program_name,
        total_rounds=total_rounds,
        last_fault_round=last_fault,
        legal_rounds=legal_rounds,
        selection_digests=digests,
    )
    if stabilization_round is None:
        logger.warning("%s never became legal after round %d", program.program_name, last_fault)
        return report
    report.stabilization_round = stabilization_round
    report.stabilization_time = stabilization_round - last_fault
    report.stayed_legal = all(legal_rounds[stabilization_round - 1 :])
    return report


def _default_c_bound(g: Graph) -> int:
    try:
        return neighborhood_independence(g)
    except OracleInfeasibleError:
        logger.warning("independence oracle infeasible, using the max degree as load bound")
        return max_degree(g)


def run_self_stab_bp(
    g: Graph,
    faults: FaultSchedule,
    total_rounds: int,
    legality: Legality | None = None,
    c_bound: int | None = None,
    settings: SimulatorSettings | None = None,
) -> StabReport:
    """Self-stabilizing backup placement under RAM corruption.

    The default legality is a valid placement with load at most ``c_bound``,
    which defaults to the neighborhood independence of ``g``.
    """
    if legality is None:
        legality = placement_legality(g, _default_c_bound(g) if c_bound is None else c_bound)
    return run_self_stab(
        g, ProgramFactory.create("selfstab-backup-placement"), faults, total_rounds, legality, settings=settings
    )


def run_self_stab_composed(
    g: Graph,
    payload: PayloadProgram,
    faults: FaultSchedule,
    total_rounds: int,
    c_bound: int | None = None,
    settings: SimulatorSettings | None = None,
) -> ComposedReport:
    """Run ``payload`` composed behind the backup selection and account its time."""
    bound = _default_c_bound(g) if c_bound is None else c_bound
    program = compose_bp_then(payload)
    report = run_self_stab(
        g, program, faults, total_rounds, composed_legality(g, bound, payload), settings=settings
    )
    tail = report.selection_digests[faults.last_fault_round :]
    return ComposedReport(
        **report.model_dump(),
        payload=payload.program_name,
        payload_time=payload.stabilization_rounds,
        selection_constant=len(set(tail)) <= 1,
    )


def stabilization_time(report: StabReport) -> int:
    """Rounds from the last fault until the first legal state.

    Raises:
        UnstabilizedError: If the run never reached a legal state.
    """
    if not report.stabilized:
        raise UnstabilizedError(
            f"{report.program} did not stabilize within {report.total_rounds} rounds"
        )
    return report.stabilization_time


def check_ram_independence(
    program: NodeProgram,
    state: StabNodeState,
    inbox: Mapping[int, Any],
    corruptions: Iterable[bytes],
) -> bool:
    """True iff overwriting the RAM selection never changes the next state."""
    expected = program.step(state, inbox).state
    return all(program.step(replace(state, ram=ram), inbox).state == expected for ram in corruptions)


def single_fault(round_index: int, mode: FaultMode = FaultMode.RANDOM_BYTES, seed: int = 0) -> FaultSchedule:
    """Schedule corrupting every node once at ``round_index``."""
    return FaultSchedule(events=[FaultEvent(round=round_index, victims="all", mode=mode)], seed=seed)
