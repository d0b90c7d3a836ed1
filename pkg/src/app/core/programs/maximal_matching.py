"""Deterministic maximal matching over a forest decomposition.

After the coloring phase, forests ``1..degree_bound`` are handled in order and,
inside each forest, color classes 1, 2, 3 in order. Each (forest, color) slot
takes two rounds: unmatched children of the active color propose to their
forest parent, then every unmatched parent accepts its lowest-ID proposer. One
closing round delivers the last acceptances.
"""
from collections.abc import Mapping
from dataclasses import dataclass, replace
from typing import Any

from src.app.core.engine.base import NodeProgram, StepResult
from src.app.core.programs.forest_coloring import (
    ColoringState,
    coloring_rounds,
    coloring_step,
    initial_coloring_state,
)
from src.app.models.trace import ModelContext

NO_PARTNER = -1
PROPOSE = "propose"
ACCEPT = "accept"


def matching_rounds(id_bound: int, degree_bound: int) -> int:
    """Exact round count of the matching program."""
    return coloring_rounds(id_bound) + 6 * degree_bound + 1


@dataclass(frozen=True, slots=True)
class MatchingState:
    coloring: ColoringState
    partner: int | None = None
    round: int = 0

    @property
    def total_rounds(self) -> int:
        return self.coloring.total_rounds + 6 * len(self.coloring.parents) + 1


class ForestMatchingProgram(NodeProgram[MatchingState]):
    """Maximal matching; the output is the partner ID or ``NO_PARTNER``.

    ``context.degree_bound`` fixes the number of forests and therefore the
    schedule; a node with more higher neighbors than that raises
    ``DegreeBoundError`` at init.
    """

    @property
    def program_name(self) -> str:
        return "forest-matching"

    def init(self, node: int, neighbors: tuple[int, ...], context: ModelContext) -> MatchingState:
        return MatchingState(coloring=initial_coloring_state(node, neighbors, context))

    def step(self, state: MatchingState, inbox: Mapping[int, Any]) -> StepResult[MatchingState]:
        coloring = state.coloring
        r = state.round + 1

        if not coloring.finished:
            coloring, outbox = coloring_step(coloring, inbox)
            return StepResult(replace(state, coloring=coloring, round=r), outbox)

        partner = state.partner
        for sender, message in sorted(inbox.items()):
            if message == ACCEPT and partner is None:
                partner = sender

        outbox: dict[int, Any] = {}
        slot_round = r - coloring.total_rounds - 1
        if slot_round < 6 * len(coloring.parents):
            slot, accept_round = divmod(slot_round, 2)
            forest, color = divmod(slot, 3)
            if not accept_round:
                parent = coloring.parents[forest]
                if partner is None and parent is not None and coloring.colors[forest] == color:
                    outbox[parent] = PROPOSE
            elif partner is None:
                proposers = sorted(w for w, message in inbox.items() if message == PROPOSE)
                if proposers:
                    partner = proposers[0]
                    outbox[partner] = ACCEPT

        state = MatchingState(coloring=coloring, partner=partner, round=r)
        output = None
        if r >= state.total_rounds:
            output = NO_PARTNER if partner is None else partner
        return StepResult(state, outbox, output)
