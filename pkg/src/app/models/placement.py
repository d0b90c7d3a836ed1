"""Models for backup placements and their load reports."""
from pydantic import BaseModel, Field


class Placement(BaseModel):
    """Per-node backup selection ``v -> v.BP``."""

    selection: dict[int, int] = Field(
        default_factory=dict, description="Map from each selecting node to its chosen neighbor"
    )
    isolated: list[int] = Field(
        default_factory=list, description="Isolated nodes skipped in lenient mode"
    )

    def edges(self) -> list[tuple[int, int]]:
        """Distinct undirected selected edges in canonical order."""
        return sorted({(min(v, w), max(v, w)) for v, w in self.selection.items()})

    def to_lines(self) -> list[str]:
        return [f"{v} -> {w}" for v, w in sorted(self.selection.items())]


class LoadReport(BaseModel):
    """In-degree tally of a placement against a load bound."""

    in_load: dict[int, int]
    max_load: int
    c_bound: int
    violating_nodes: list[int] = Field(default_factory=list)
    histogram: dict[int, int] = Field(default_factory=dict)
    isolated_nodes: list[int] = Field(default_factory=list)

    @property
    def holds(self) -> bool:
        return not self.violating_nodes

    def to_json_dict(self) -> dict:
        return {
            "max_load": self.max_load,
            "violations": self.violating_nodes,
            "histogram": {str(load): count for load, count in sorted(self.histogram.items())},
        }
