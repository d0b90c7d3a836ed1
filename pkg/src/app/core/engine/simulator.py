"""Deterministic synchronous round simulator for the LOCAL model."""
import dataclasses
import hashlib
import json
import logging
import math
from collections.abc import Callable
from typing import Any

from src.app.core.engine.base import NodeProgram
from src.app.core.exceptions import IncompleteTraceError, SimulationError
from src.app.core.settings import SimulatorSettings, get_settings
from src.app.models.graph import Graph
from src.app.models.trace import ModelContext, RoundSnapshot, Trace

logger = logging.getLogger(__name__)

RoundHook = Callable[[int, dict[int, Any]], dict[int, Any]]


def log_star(x: float) -> int:
    """Number of times log2 must be applied to ``x`` to reach a value <= 2."""
    count = 0
    while x > 2:
        x = math.log2(x)
        count += 1
    return count


def state_digest(payload: Any) -> str:
    """Canonical short hash of a node state."""
    if dataclasses.is_dataclass(payload) and not isinstance(payload, type):
        payload = dataclasses.asdict(payload)
    encoded = json.dumps(payload, sort_keys=True, default=_encode_default).encode()
    return hashlib.blake2b(encoded, digest_size=8).hexdigest()


def _encode_default(value: Any) -> Any:
    if isinstance(value, (set, frozenset)):
        return sorted(value)
    if isinstance(value, bytes):
        return value.hex()
    if hasattr(value, "model_dump"):
        return value.model_dump(mode="json")
    return repr(value)


def default_context(graph: Graph) -> ModelContext:
    """Context with the graph's own max ID and max degree."""
    return ModelContext(
        id_bound=graph.max_id,
        degree_bound=max((graph.degree(v) for v in graph.nodes), default=0),
    )


class SyncSimulator:
    """Runs a node program on every node of a graph in lock-step rounds."""

    def __init__(
        self,
        graph: Graph,
        program: NodeProgram,
        context: ModelContext | None = None,
        settings: SimulatorSettings | None = None,
    ):
        """Initialize the simulator.

        Args:
            graph: The network topology.
            program: The program every node runs.
            context: Global model parameters; derived from the graph if omitted.
            settings: Optional settings. Uses the global settings if not provided.
        """
        self._graph = graph
        self._program = program
        self._context = context or default_context(graph)
        self._settings = settings or get_settings()
        self._nodes = graph.nodes
        self.states: dict[int, Any] = {
            v: program.init(v, graph.neighbors(v), self._context) for v in self._nodes
        }

    @property
    def context(self) -> ModelContext:
        return self._context

    def run(
        self,
        max_rounds: int | None = None,
        stop_when_done: bool = True,
        round_hook: RoundHook | None = None,
    ) -> Trace:
        """Execute rounds until every node has an output or the round cap is hit.

        Args:
            max_rounds: Round cap. Uses ``settings.max_rounds`` if not provided.
            stop_when_done: Stop as soon as every node has produced an output.
            round_hook: Called with the round index and all states at each round
                boundary; its return value replaces the states.

        Returns:
            The run trace. ``complete`` is False when the cap was reached first.
        """
        limit = max_rounds if max_rounds is not None else self._settings.max_rounds
        if limit < 1:
            raise ValueError("max_rounds must be at least 1")

        trace = Trace(program=self._program.program_name)
        inboxes: dict[int, dict[int, Any]] = {v: {} for v in self._nodes}

        for round_index in range(1, limit + 1):
            delivered = sum(len(inbox) for inbox in inboxes.values())
            next_inboxes: dict[int, dict[int, Any]] = {v: {} for v in self._nodes}
            next_states: dict[int, Any] = {}
            sent = 0

            for v in self._nodes:
                result = self._program.step(self.states[v], inboxes[v])
                next_states[v] = result.state
                for w, message in result.outbox.items():
                    if not self._graph.has_edge(v, w):
                        raise SimulationError(f"node {v} sent a message to non-neighbor {w}")
                    next_inboxes[w][v] = message
                    sent += 1
                if result.output is not None:
                    trace.outputs[v] = result.output
                    trace.output_rounds.setdefault(v, round_index)

            if round_hook is not None:
                next_states = round_hook(round_index, next_states)

            self.states = next_states
            inboxes = next_inboxes
            trace.rounds_executed = round_index
            trace.messages_sent += sent
            trace.messages_delivered += delivered
            trace.snapshots.append(self._snapshot(round_index, sent, delivered))

            if stop_when_done and len(trace.output_rounds) == len(self._nodes):
                trace.complete = True
                break
        else:
            trace.complete = not stop_when_done

        if not trace.complete:
            logger.warning(
                "%s did not finish within %d rounds (%d/%d nodes decided)",
                trace.program,
                limit,
                len(trace.output_rounds),
                len(self._nodes),
            )
        return trace

    def _snapshot(self, round_index: int, sent: int, delivered: int) -> RoundSnapshot:
        snapshot = RoundSnapshot(round=round_index, messages_sent=sent, messages_delivered=delivered)
        if self._settings.record_digests:
            snapshot.digests = {
                v: state_digest(self._program.digest_payload(state))
                for v, state in self.states.items()
            }
        if self._settings.keep_full_states:
            snapshot.states = dict(self.states)
        return snapshot


def run_sync(
    graph: Graph,
    program: NodeProgram,
    max_rounds: int | None = None,
    context: ModelContext | None = None,
    settings: SimulatorSettings | None = None,
) -> Trace:
    """Run ``program`` on ``graph`` until all nodes decide or ``max_rounds`` pass."""
    return SyncSimulator(graph, program, context=context, settings=settings).run(max_rounds)


def round_count(trace: Trace) -> int:
    """Rounds until the last node produced its output.

    Raises:
        IncompleteTraceError: If the run did not finish.
    """
    if not trace.complete:
        raise IncompleteTraceError(
            f"{trace.program} trace is incomplete after {trace.rounds_executed} rounds"
        )
    return max(trace.output_rounds.values(), default=trace.rounds_executed)
