"""Cole-Vishkin style 3-coloring of rooted forests, all forests in parallel.

Every edge is oriented toward its higher-ID endpoint. A node's ``i``-th higher
neighbor (ascending) is its parent in forest ``i``. Round layout, for a run
with ``T = cv_iterations(id_bound)``:

* round 1: announce initial colors (the node ID in every forest)
* rounds 2 .. T+1: one color-reduction step per round
* rounds T+2 .. T+7: three (shift-down, recolor) pairs removing colors 5, 4, 3

Messages carry the sender's color tuple plus the forest index in which the
receiver is the sender's parent, so children are discovered from the inbox.
"""
from collections.abc import Mapping, Sequence
from dataclasses import dataclass, replace
from typing import Any

from src.app.core.engine.base import NodeProgram, StepResult
from src.app.core.exceptions import DegreeBoundError
from src.app.models.trace import ModelContext

PALETTE = (0, 1, 2)
REDUCED_COLORS = 6


def cv_step(color: int, parent_color: int) -> int:
    """One color-reduction step: ``2 * i + bit_i(color)`` for the lowest differing bit ``i``."""
    diff = color ^ parent_color
    i = (diff & -diff).bit_length() - 1
    return 2 * i + ((color >> i) & 1)


def cv_iterations(id_bound: int) -> int:
    """Reduction steps needed to bring colors from ``[0, id_bound]`` into ``[0, 6)``."""
    colors = id_bound + 1
    steps = 0
    while colors > REDUCED_COLORS:
        colors = 2 * max(1, (colors - 1).bit_length())
        steps += 1
    return steps


def coloring_rounds(id_bound: int) -> int:
    """Total rounds of the coloring phase."""
    return 1 + cv_iterations(id_bound) + 6


def higher_neighbors(node: int, neighbors: Sequence[int]) -> tuple[int, ...]:
    """Neighbors with a higher ID, ascending; entry ``i`` is the parent in forest ``i``."""
    return tuple(w for w in neighbors if w > node)


@dataclass(frozen=True, slots=True)
class ColoringState:
    node: int
    neighbors: tuple[int, ...]
    parents: tuple[int | None, ...]
    cv_rounds: int
    colors: tuple[int, ...]
    children: tuple[frozenset[int], ...] | None = None
    round: int = 0

    @property
    def total_rounds(self) -> int:
        return 1 + self.cv_rounds + 6

    @property
    def finished(self) -> bool:
        return self.round >= self.total_rounds

    def final_colors(self) -> tuple[int, ...]:
        """Colors as 1..3. A node with no edge in a forest gets color 1 there."""
        children = self.children or tuple(frozenset() for _ in self.parents)
        return tuple(
            1 if parent is None and not kids else color + 1
            for parent, kids, color in zip(self.parents, children, self.colors)
        )


def initial_coloring_state(
    node: int,
    neighbors: tuple[int, ...],
    context: ModelContext,
    parents: Sequence[int | None] | None = None,
) -> ColoringState:
    """Build the round-0 coloring state of a node.

    Args:
        node: The node's ID.
        neighbors: Its ascending neighbor IDs.
        context: Model parameters; ``degree_bound`` is the number of forests.
        parents: Explicit parent per forest. Derived from the ID orientation
            when omitted.

    Raises:
        DegreeBoundError: If the node has more higher neighbors than forests.
    """
    forests = context.degree_bound
    if parents is None:
        higher = higher_neighbors(node, neighbors)
        if len(higher) > forests:
            raise DegreeBoundError(
                f"node {node} has {len(higher)} higher neighbors but the degree bound is {forests}"
            )
        parents = higher + (None,) * (forests - len(higher))
    return ColoringState(
        node=node,
        neighbors=neighbors,
        parents=tuple(parents),
        cv_rounds=cv_iterations(context.id_bound),
        colors=(node,) * len(parents),
    )


def _outbox(state: ColoringState) -> dict[int, Any]:
    labels = {parent: i for i, parent in enumerate(state.parents) if parent is not None}
    return {w: (state.colors, labels.get(w)) for w in state.neighbors}


def _learn_children(state: ColoringState, inbox: Mapping[int, Any]) -> tuple[frozenset[int], ...]:
    kids: list[set[int]] = [set() for _ in state.parents]
    for sender, (_, label) in inbox.items():
        if label is not None:
            kids[label].add(sender)
    return tuple(frozenset(k) for k in kids)


def _parent_color(state: ColoringState, inbox: Mapping[int, Any], forest: int) -> int | None:
    parent = state.parents[forest]
    return None if parent is None else inbox[parent][0][forest]


def _child_colors(state: ColoringState, inbox: Mapping[int, Any], forest: int) -> set[int]:
    return {inbox[child][0][forest] for child in state.children[forest]}


def coloring_step(
    state: ColoringState, inbox: Mapping[int, Any]
) -> tuple[ColoringState, dict[int, Any]]:
    """Advance the coloring phase by one round.

    Returns:
        The next state and the outbox. The outbox is empty in the final round.
    """
    r = state.round + 1
    children = state.children
    if r == 2:
        children = _learn_children(state, inbox)
    state = replace(state, round=r, children=children)

    if r == 1:
        return state, _outbox(state)

    forests = range(len(state.parents))
    if r <= 1 + state.cv_rounds:
        colors = []
        for i in forests:
            own = state.colors[i]
            parent = _parent_color(state, inbox, i)
            colors.append(cv_step(own, own ^ 1 if parent is None else parent))
    else:
        phase = r - state.cv_rounds - 2
        target = 5 - phase // 2
        colors = list(state.colors)
        for i in forests:
            parent = _parent_color(state, inbox, i)
            if phase % 2 == 0:
                if parent is None:
                    colors[i] = next(x for x in PALETTE if x != state.colors[i])
                else:
                    colors[i] = parent
            elif state.colors[i] == target:
                taken = _child_colors(state, inbox, i)
                if parent is not None:
                    taken.add(parent)
                colors[i] = next(x for x in PALETTE if x not in taken)

    state = replace(state, colors=tuple(colors))
    return state, ({} if state.finished else _outbox(state))


class ForestColoringProgram(NodeProgram[ColoringState]):
    """3-colors every forest of the decomposition; output is a tuple of colors 1..3.

    With ``forests`` given, each node takes its parents from those maps instead
    of the ID orientation.
    """

    def __init__(self, forests: Sequence[Mapping[int, int]] | None = None):
        self._forests = forests

    @property
    def program_name(self) -> str:
        return "forest-coloring"

    def init(self, node: int, neighbors: tuple[int, ...], context: ModelContext) -> ColoringState:
        if self._forests is None:
            return initial_coloring_state(node, neighbors, context)
        parents = [forest.get(node) for forest in self._forests]
        return initial_coloring_state(node, neighbors, context, parents)

    def step(self, state: ColoringState, inbox: Mapping[int, Any]) -> StepResult[ColoringState]:
        if state.finished:
            return StepResult(state, {}, state.final_colors())
        state, outbox = coloring_step(state, inbox)
        return StepResult(state, outbox, state.final_colors() if state.finished else None)
