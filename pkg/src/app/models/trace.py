"""Models describing a synchronous simulation run."""
from typing import Any

from pydantic import BaseModel, Field


class ModelContext(BaseModel):
    """Global model parameters every node program may read.

    Programs see the ID universe bound and an upper bound on the degree; no
    other global knowledge is assumed.
    """

    id_bound: int = Field(ge=0, description="Upper bound on every NodeId")
    degree_bound: int = Field(ge=0, description="Upper bound on every node degree")


class RoundSnapshot(BaseModel):
    """Digest of every node state after one round."""

    round: int
    messages_sent: int = 0
    messages_delivered: int = 0
    digests: dict[int, str] = Field(default_factory=dict)
    states: dict[int, Any] | None = Field(
        default=None, description="Full states, kept only when the debug flag is set"
    )


class Trace(BaseModel):
    """Record of one synchronous run."""

    program: str
    rounds_executed: int = 0
    complete: bool = False
    outputs: dict[int, Any] = Field(default_factory=dict)
    output_rounds: dict[int, int] = Field(
        default_factory=dict, description="Round in which each node first produced its output"
    )
    messages_sent: int = 0
    messages_delivered: int = 0
    snapshots: list[RoundSnapshot] = Field(default_factory=list)
