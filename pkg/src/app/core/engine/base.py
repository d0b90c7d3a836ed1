"""Base node program interface for the synchronous simulator."""
from abc import ABC, abstractmethod
from collections.abc import Mapping
from typing import Any, Generic, NamedTuple, TypeVar

from src.app.models.trace import ModelContext

S = TypeVar("S")


class StepResult(NamedTuple, Generic[S]):
    """What a node produces in one round."""

    state: S
    outbox: Mapping[int, Any]
    output: Any = None


class NodeProgram(ABC, Generic[S]):
    """Abstract base class for per-node programs run in lock-step rounds.

    ``step`` must be a pure function of its arguments. Any randomness has to be
    seeded through the state.
    """

    @property
    @abstractmethod
    def program_name(self) -> str:
        """Return the name of the program."""
        pass

    @abstractmethod
    def init(self, node: int, neighbors: tuple[int, ...], context: ModelContext) -> S:
        """Build the initial state of a node.

        Args:
            node: The node's own ID.
            neighbors: Ascending IDs of its neighbors.
            context: Global model parameters.

        Returns:
            The initial node state.
        """
        pass

    @abstractmethod
    def step(self, state: S, inbox: Mapping[int, Any]) -> StepResult[S]:
        """Run one round at a node.

        Args:
            state: The node state at the start of the round.
            inbox: Messages sent to this node in the previous round, by sender.

        Returns:
            The new state, the outbox keyed by neighbor, and the output
            (``None`` while undecided).
        """
        pass

    def digest_payload(self, state: S) -> Any:
        """Return a JSON-serializable view of a state for digests."""
        return state
