"""Graph representation and generator parameters."""
from bisect import bisect_left
from collections import deque
from collections.abc import Iterable, Mapping
from enum import Enum
from typing import Annotated

import networkx as nx
from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.app.core.exceptions import GraphValidationError

NodeId = Annotated[int, Field(ge=0)]
Edge = tuple[int, int]


class Graph(BaseModel):
    """Simple undirected graph with unique non-negative integer node IDs.

    ``adjacency`` maps every node to the ascending tuple of its neighbors.
    Instances are immutable; every transformation returns a new graph.
    """

    model_config = ConfigDict(frozen=True)

    adjacency: dict[NodeId, tuple[NodeId, ...]] = Field(default_factory=dict)

    @model_validator(mode="after")
    def _check_invariants(self) -> "Graph":
        for v, neighbors in self.adjacency.items():
            if list(neighbors) != sorted(set(neighbors)):
                raise GraphValidationError(f"neighbors of {v} are not sorted and unique")
            for w in neighbors:
                if w == v:
                    raise GraphValidationError(f"self-loop at node {v}")
                if w not in self.adjacency:
                    raise GraphValidationError(f"neighbor {w} of {v} is not a node")
        for v, neighbors in self.adjacency.items():
            for w in neighbors:
                if not _contains(self.adjacency[w], v):
                    raise GraphValidationError(f"edge {v}-{w} is not symmetric")
        return self

    @classmethod
    def from_edges(cls, edges: Iterable[Edge], nodes: Iterable[int] = ()) -> "Graph":
        """Build a graph from an edge iterable plus optional extra nodes.

        Duplicate edges collapse. Self-loops raise GraphValidationError.
        """
        neighbor_sets: dict[int, set[int]] = {v: set() for v in nodes}
        for u, v in edges:
            if u == v:
                raise GraphValidationError(f"self-loop at node {u}")
            neighbor_sets.setdefault(u, set()).add(v)
            neighbor_sets.setdefault(v, set()).add(u)
        return cls(
            adjacency={v: tuple(sorted(ws)) for v, ws in sorted(neighbor_sets.items())}
        )

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> "Graph":
        """Convert a networkx graph whose nodes are non-negative integers."""
        return cls.from_edges(
            ((int(u), int(v)) for u, v in graph.edges()),
            nodes=(int(v) for v in graph.nodes()),
        )

    def to_networkx(self) -> nx.Graph:
        """Return an equivalent networkx graph."""
        graph = nx.Graph()
        graph.add_nodes_from(self.nodes)
        graph.add_edges_from(self.edges())
        return graph

    @property
    def nodes(self) -> tuple[int, ...]:
        """All node IDs in ascending order."""
        return tuple(sorted(self.adjacency))

    @property
    def n(self) -> int:
        return len(self.adjacency)

    @property
    def max_id(self) -> int:
        """Largest node ID, or 0 for the empty graph."""
        return max(self.adjacency, default=0)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return u in self.adjacency and _contains(self.adjacency[u], v)

    def edges(self) -> list[Edge]:
        """Edges as (min, max) pairs in lexicographic order."""
        return [
            (v, w)
            for v in self.nodes
            for w in self.adjacency[v]
            if v < w
        ]

    def num_edges(self) -> int:
        return sum(len(ws) for ws in self.adjacency.values()) // 2

    def isolated_nodes(self) -> list[int]:
        return [v for v in self.nodes if not self.adjacency[v]]

    def induced_subgraph(self, nodes: Iterable[int]) -> "Graph":
        keep = set(nodes) & set(self.adjacency)
        return Graph(
            adjacency={
                v: tuple(w for w in self.adjacency[v] if w in keep) for v in sorted(keep)
            }
        )

    def without_nodes(self, nodes: Iterable[int]) -> "Graph":
        drop = set(nodes)
        return self.induced_subgraph(v for v in self.adjacency if v not in drop)

    def without_isolated(self) -> "Graph":
        return self.induced_subgraph(v for v, ws in self.adjacency.items() if ws)

    def edge_subgraph(self, edges: Iterable[Edge]) -> "Graph":
        """Graph on the same node set restricted to the given edges."""
        edge_list = list(edges)
        for u, v in edge_list:
            if not self.has_edge(u, v):
                raise GraphValidationError(f"{u}-{v} is not an edge of the graph")
        return Graph.from_edges(edge_list, nodes=self.nodes)

    def relabel(self, mapping: Mapping[int, int]) -> "Graph":
        """Apply an injective relabeling to every node."""
        if len(set(mapping[v] for v in self.adjacency)) != self.n:
            raise GraphValidationError("relabeling is not injective")
        return Graph.from_edges(
            ((mapping[u], mapping[v]) for u, v in self.edges()),
            nodes=(mapping[v] for v in self.adjacency),
        )

    def ball(self, center: int, radius: int) -> "Graph":
        """Subgraph induced by all nodes within ``radius`` hops of ``center``."""
        seen = {center: 0}
        frontier: deque[int] = deque([center])
        while frontier:
            v = frontier.popleft()
            if seen[v] == radius:
                continue
            for w in self.adjacency[v]:
                if w not in seen:
                    seen[w] = seen[v] + 1
                    frontier.append(w)
        return self.induced_subgraph(seen)


def _contains(sorted_ids: tuple[int, ...], target: int) -> bool:
    i = bisect_left(sorted_ids, target)
    return i < len(sorted_ids) and sorted_ids[i] == target


class GraphFamily(str, Enum):
    """Graph families the generators can produce."""

    UNIT_DISK = "unit-disk"
    UNIT_BALL = "unit-ball"
    LINE_GRAPH = "line-graph"
    RANDOM_GNP = "random-gnp"
    EXPLICIT_FILE = "explicit-file"


class GraphFamilyParams(BaseModel):
    """Parameters that fully determine a generated graph."""

    family: GraphFamily
    n: int = Field(default=1, ge=1, description="Number of nodes (base nodes for line graphs)")
    radius: float | None = Field(default=None, gt=0, description="Connection radius (geometric families)")
    p: float | None = Field(default=None, ge=0.0, le=1.0, description="Edge probability (random-gnp, line-graph base)")
    seed: int = Field(default=0, ge=0, lt=2**64)
    dimension: int = Field(default=3, ge=2, description="Ambient dimension (unit-ball only)")
    path: str | None = Field(default=None, description="Edge-list file (explicit-file only)")

    @model_validator(mode="after")
    def _check_family_fields(self) -> "GraphFamilyParams":
        if self.family in (GraphFamily.UNIT_DISK, GraphFamily.UNIT_BALL) and self.radius is None:
            raise ValueError(f"{self.family.value} requires a radius")
        if self.family in (GraphFamily.RANDOM_GNP, GraphFamily.LINE_GRAPH) and self.p is None:
            raise ValueError(f"{self.family.value} requires an edge probability p")
        if self.family == GraphFamily.EXPLICIT_FILE and not self.path:
            raise ValueError("explicit-file requires a path")
        return self
