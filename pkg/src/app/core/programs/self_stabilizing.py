"""Self-stabilizing programs for the ROM/RAM node model.

ROM holds the node's own ID and its port list (neighbor IDs); it is never
written. RAM holds the encoded backup selection and, for composed programs,
the payload state. Every step recomputes the selection from ROM alone.
"""
from abc import abstractmethod
from collections.abc import Mapping
from dataclasses import dataclass, replace
from typing import Any, Generic, TypeVar

import numpy as np

from src.app.core.engine.base import NodeProgram, StepResult
from src.app.core.exceptions import IsolatedVertexError
from src.app.core.programs.backup_placement import next_modulo
from src.app.models.trace import ModelContext

P = TypeVar("P")


def encode_selection(selection: int) -> bytes:
    return str(selection).encode()


def decode_selection(ram: bytes) -> int | None:
    """Parse a RAM selection; corrupted contents decode to ``None``."""
    try:
        text = ram.decode("ascii")
    except UnicodeDecodeError:
        return None
    if not text.isdigit():
        return None
    return int(text)


@dataclass(frozen=True, slots=True)
class StabNodeState:
    rom: int
    ports: tuple[int, ...]
    ram: bytes = b""
    payload: Any = None

    @property
    def selection(self) -> int | None:
        return decode_selection(self.ram)


def _initial_state(node: int, neighbors: tuple[int, ...]) -> StabNodeState:
    if not neighbors:
        raise IsolatedVertexError(f"no neighbor to select for node {node}", [node])
    return StabNodeState(rom=node, ports=neighbors)


class SelfStabBackupPlacementProgram(NodeProgram[StabNodeState]):
    """Repeats the next-modulo selection every round and writes it to RAM."""

    @property
    def program_name(self) -> str:
        return "selfstab-backup-placement"

    def init(self, node: int, neighbors: tuple[int, ...], context: ModelContext) -> StabNodeState:
        return _initial_state(node, neighbors)

    def step(self, state: StabNodeState, inbox: Mapping[int, Any]) -> StepResult[StabNodeState]:
        choice = next_modulo(state.rom, state.ports)
        return StepResult(replace(state, ram=encode_selection(choice)), {}, choice)

    def digest_payload(self, state: StabNodeState) -> Any:
        return {"rom": state.rom, "ram": state.ram.hex()}

    def corrupt_payload(self, payload: Any, rng: np.random.Generator) -> Any:
        return payload


class PayloadProgram(NodeProgram[P], Generic[P]):
    """A program run on top of the selected subgraph.

    ``restrict`` hands the payload its current view of the selected subgraph
    before each step.
    """

    stabilization_rounds: int = 0

    def restrict(self, state: P, view: tuple[int, ...]) -> P:
        return state

    def legal(self, state: P, view: tuple[int, ...]) -> bool:
        """Whether ``state`` is a proper payload state for the given true view."""
        return True

    @abstractmethod
    def corrupt(self, state: P, rng: np.random.Generator) -> P:
        """Return an arbitrary RAM value for the payload state."""
        pass


class ConstantPayload(PayloadProgram[int]):
    """Outputs 0 in every round."""

    @property
    def program_name(self) -> str:
        return "constant"

    def init(self, node: int, neighbors: tuple[int, ...], context: ModelContext) -> int:
        return 0

    def step(self, state: int, inbox: Mapping[int, Any]) -> StepResult[int]:
        return StepResult(0, {}, 0)

    def legal(self, state: int, view: tuple[int, ...]) -> bool:
        return state == 0

    def corrupt(self, state: int, rng: np.random.Generator) -> int:
        return int(rng.integers(0, 2**31))


@dataclass(frozen=True, slots=True)
class DegreeEchoState:
    node: int
    view: tuple[int, ...]


class DegreeEchoPayload(PayloadProgram[DegreeEchoState]):
    """Outputs the node's degree in its view of the selected subgraph.

    The view is complete once the neighbors' selections of the previous round
    have arrived, so it needs one round on a fixed subgraph.
    """

    stabilization_rounds = 1

    @property
    def program_name(self) -> str:
        return "degree-echo"

    def init(self, node: int, neighbors: tuple[int, ...], context: ModelContext) -> DegreeEchoState:
        return DegreeEchoState(node=node, view=neighbors)

    def restrict(self, state: DegreeEchoState, view: tuple[int, ...]) -> DegreeEchoState:
        return DegreeEchoState(node=state.node, view=view)

    def step(self, state: DegreeEchoState, inbox: Mapping[int, Any]) -> StepResult[DegreeEchoState]:
        return StepResult(state, {}, len(state.view))

    def legal(self, state: DegreeEchoState, view: tuple[int, ...]) -> bool:
        return state.view == view

    def corrupt(self, state: DegreeEchoState, rng: np.random.Generator) -> DegreeEchoState:
        size = int(rng.integers(0, 8))
        return DegreeEchoState(node=state.node, view=tuple(int(x) for x in rng.integers(0, 2**16, size)))


class ComposedProgram(NodeProgram[StabNodeState]):
    """Backup selection first, then one payload step restricted to the selected subgraph.

    Each node sends its fresh selection to every neighbor. Its view of the
    selected subgraph is its own selection plus every neighbor whose previous
    selection was this node. Payload messages travel only along view edges.
    The output is ``(selection, payload_output)``.
    """

    def __init__(self, payload: PayloadProgram):
        self.payload = payload

    @property
    def program_name(self) -> str:
        return f"bp+{self.payload.program_name}"

    def init(self, node: int, neighbors: tuple[int, ...], context: ModelContext) -> StabNodeState:
        state = _initial_state(node, neighbors)
        return replace(state, payload=self.payload.init(node, neighbors, context))

    @staticmethod
    def view_of(state: StabNodeState, selection: int, inbox: Mapping[int, Any]) -> tuple[int, ...]:
        selectors = {u for u, (choice, _) in inbox.items() if choice == state.rom}
        return tuple(sorted(selectors | {selection}))

    def step(self, state: StabNodeState, inbox: Mapping[int, Any]) -> StepResult[StabNodeState]:
        choice = next_modulo(state.rom, state.ports)
        view = self.view_of(state, choice, inbox)
        payload_inbox = {
            u: message for u, (_, message) in inbox.items() if u in view and message is not None
        }
        result = self.payload.step(self.payload.restrict(state.payload, view), payload_inbox)

        outbox: dict[int, Any] = {w: (choice, None) for w in state.ports}
        for w, message in result.outbox.items():
            if w in view:
                outbox[w] = (choice, message)

        next_state = StabNodeState(
            rom=state.rom, ports=state.ports, ram=encode_selection(choice), payload=result.state
        )
        return StepResult(next_state, outbox, (choice, result.output))

    def digest_payload(self, state: StabNodeState) -> Any:
        return {"rom": state.rom, "ram": state.ram.hex(), "payload": state.payload}

    def corrupt_payload(self, payload: Any, rng: np.random.Generator) -> Any:
        return self.payload.corrupt(payload, rng)


def compose_bp_then(payload: PayloadProgram) -> ComposedProgram:
    """Wrap ``payload`` so that every round starts with the backup selection."""
    return ComposedProgram(payload)
