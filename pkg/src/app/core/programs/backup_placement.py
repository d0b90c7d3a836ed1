"""One-round backup placement by next-modulo selection."""
from bisect import bisect_right
from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from typing import Any

from src.app.core.engine.base import NodeProgram, StepResult
from src.app.core.exceptions import IsolatedVertexError
from src.app.models.trace import ModelContext


def next_modulo(v: int, neighbors: Iterable[int]) -> int:
    """Successor of ``v`` in the circular sorted order of ``neighbors + {v}``.

    Returns the smallest neighbor ID above ``v``, or the smallest neighbor ID
    when no neighbor is above ``v``.

    Raises:
        IsolatedVertexError: If ``neighbors`` is empty.
    """
    ordered = tuple(sorted(neighbors))
    if not ordered:
        raise IsolatedVertexError(f"no neighbor to select for node {v}", [v])
    i = bisect_right(ordered, v)
    return ordered[i] if i < len(ordered) else ordered[0]


@dataclass(frozen=True, slots=True)
class BackupPlacementState:
    node: int
    neighbors: tuple[int, ...]
    selection: int | None = None


class BackupPlacementProgram(NodeProgram[BackupPlacementState]):
    """Every node picks ``next_modulo`` of its neighborhood in its first round."""

    @property
    def program_name(self) -> str:
        return "backup-placement"

    def init(
        self, node: int, neighbors: tuple[int, ...], context: ModelContext
    ) -> BackupPlacementState:
        if not neighbors:
            raise IsolatedVertexError(f"no neighbor to select for node {node}", [node])
        return BackupPlacementState(node=node, neighbors=neighbors)

    def step(
        self, state: BackupPlacementState, inbox: Mapping[int, Any]
    ) -> StepResult[BackupPlacementState]:
        choice = next_modulo(state.node, state.neighbors)
        return StepResult(
            BackupPlacementState(state.node, state.neighbors, choice), {}, choice
        )
