"""Models for fault injection and stabilization measurement."""
from collections.abc import Sequence
from enum import Enum
from typing import Literal

import numpy as np
from pydantic import BaseModel, Field, field_validator

ALL_VICTIMS = "all"


class FaultMode(str, Enum):
    """How the adversary overwrites a victim's RAM."""

    RANDOM_BYTES = "random-bytes"
    TARGETED_VALUE = "targeted-value"


class FaultEvent(BaseModel):
    """RAM corruption applied at the end of one round."""

    round: int = Field(ge=1, description="Round after whose step the corruption is applied")
    victims: list[int] | Literal["all"] = Field(description="Victim node IDs, or 'all'")
    mode: FaultMode = FaultMode.RANDOM_BYTES

    def victims_in(self, nodes: Sequence[int]) -> list[int]:
        if self.victims == ALL_VICTIMS:
            return list(nodes)
        present = set(nodes)
        return sorted(v for v in self.victims if v in present)


class FaultSchedule(BaseModel):
    """Ordered fault events plus the seed driving every corruption."""

    events: list[FaultEvent] = Field(default_factory=list)
    seed: int = Field(default=0, ge=0, lt=2**64)

    @field_validator("events")
    @classmethod
    def _sort_events(cls, events: list[FaultEvent]) -> list[FaultEvent]:
        return sorted(events, key=lambda event: event.round)

    @property
    def last_fault_round(self) -> int:
        """Round of the last event, or 0 for a faultless schedule."""
        return self.events[-1].round if self.events else 0

    def events_at(self, round_index: int) -> list[FaultEvent]:
        return [event for event in self.events if event.round == round_index]

    @classmethod
    def random(
        cls,
        nodes: Sequence[int],
        max_round: int,
        num_events: int,
        seed: int,
        mode: FaultMode | None = None,
    ) -> "FaultSchedule":
        """Draw a seeded schedule over rounds ``1..max_round``.

        Each event hits a random non-empty subset of ``nodes`` (or all of them
        with probability 1/4). Modes alternate at random unless ``mode`` is fixed.
        """
        rng = np.random.default_rng(seed)
        events = []
        for _ in range(num_events):
            round_index = int(rng.integers(1, max_round + 1))
            if not nodes or rng.random() < 0.25:
                victims: list[int] | str = ALL_VICTIMS
            else:
                size = int(rng.integers(1, len(nodes) + 1))
                victims = sorted(int(v) for v in rng.choice(np.asarray(nodes), size=size, replace=False))
            chosen = mode or (FaultMode.RANDOM_BYTES if rng.random() < 0.5 else FaultMode.TARGETED_VALUE)
            events.append(FaultEvent(round=round_index, victims=victims, mode=chosen))
        return cls(events=events, seed=seed)


class StabReport(BaseModel):
    """Outcome of a self-stabilization run."""

    program: str
    total_rounds: int
    last_fault_round: int = Field(description="0 when no fault occurred")
    stabilization_round: int | None = Field(
        default=None, description="First legal round after the last fault"
    )
    stabilization_time: int | None = None
    stayed_legal: bool = False
    legal_rounds: list[bool] = Field(
        default_factory=list, description="Legality of the global state after each round"
    )
    selection_digests: list[str] = Field(
        default_factory=list, description="Hash of the global selection map after each round"
    )

    @property
    def stabilized(self) -> bool:
        return self.stabilization_round is not None


class ComposedReport(StabReport):
    """Stabilization report of a composed program with its time accounting."""

    payload: str
    payload_time: int = Field(ge=0, description="Stabilization time of the payload on a fixed subgraph")
    selection_constant: bool = Field(
        default=False, description="Selection map unchanged across faultless rounds after stabilizing"
    )

    @property
    def within_bound(self) -> bool:
        return self.stabilization_time is not None and self.stabilization_time <= 1 + self.payload_time
