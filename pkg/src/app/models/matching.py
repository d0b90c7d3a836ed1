"""Models for matchings, approximation settings and forest decompositions."""
from collections.abc import Iterable

from pydantic import BaseModel, Field, model_validator

from src.app.core.exceptions import InvalidMatchingError


class Matching(BaseModel):
    """Set of vertex-disjoint undirected edges, stored as sorted (min, max) pairs."""

    edges: tuple[tuple[int, int], ...] = ()

    @model_validator(mode="before")
    @classmethod
    def _canonicalize(cls, data):
        if isinstance(data, dict) and "edges" in data:
            data = dict(data)
            data["edges"] = tuple(sorted({(min(u, v), max(u, v)) for u, v in data["edges"]}))
        return data

    @model_validator(mode="after")
    def _check_disjoint(self) -> "Matching":
        seen: set[int] = set()
        for u, v in self.edges:
            if u == v:
                raise InvalidMatchingError(f"edge {u}-{v} is a self-loop")
            if u in seen or v in seen:
                raise InvalidMatchingError(f"edge {u}-{v} shares an endpoint with another edge")
            seen.update((u, v))
        return self

    @classmethod
    def of(cls, edges: Iterable[tuple[int, int]]) -> "Matching":
        return cls(edges=tuple(edges))

    @property
    def size(self) -> int:
        return len(self.edges)

    def matched_nodes(self) -> set[int]:
        return {v for edge in self.edges for v in edge}

    def partner(self) -> dict[int, int]:
        mates: dict[int, int] = {}
        for u, v in self.edges:
            mates[u] = v
            mates[v] = u
        return mates

    def union(self, other: "Matching") -> "Matching":
        return Matching.of(self.edges + other.edges)

    def to_lines(self) -> list[str]:
        return [f"{u} {v}" for u, v in self.edges]


def required_iterations(epsilon: float, c: int) -> int:
    """Smallest i >= 1 with (c / (c + 1)) ** i <= epsilon / (2 * (c + 1))."""
    target = epsilon / (2 * (c + 1))
    decay = c / (c + 1)
    i = 1
    while decay**i > target:
        i += 1
    return i


class ApproxConfig(BaseModel):
    """Parameters of the iterated matching approximation."""

    epsilon: float = Field(gt=0)
    c: int = Field(ge=1, description="Upper bound on the neighborhood independence")
    k: int | None = Field(default=None, ge=1, description="Iterations; derived from epsilon and c when omitted")
    enforce_bound: bool = Field(
        default=True, description="Reject a k below the derived iteration count"
    )

    @model_validator(mode="after")
    def _derive_k(self) -> "ApproxConfig":
        needed = required_iterations(self.epsilon, self.c)
        if self.k is None:
            self.k = needed
        elif self.enforce_bound and self.k < needed:
            raise ValueError(
                f"k={self.k} is below the {needed} iterations needed for epsilon={self.epsilon}, c={self.c}"
            )
        return self

    @property
    def ratio_bound(self) -> float:
        return 2 + self.epsilon


class ForestDecomposition(BaseModel):
    """Edges split into rooted forests by out-edge rank toward higher IDs.

    ``forests[i]`` is the parent map of forest ``i + 1``; ``colors[i]`` is
    filled in once that forest has been 3-colored.
    """

    forests: list[dict[int, int]] = Field(default_factory=list)
    colors: list[dict[int, int]] = Field(default_factory=list)

    @property
    def size(self) -> int:
        return len(self.forests)

    def edges(self) -> list[tuple[int, int]]:
        return sorted(
            (min(child, parent), max(child, parent))
            for forest in self.forests
            for child, parent in forest.items()
        )


class IterationRecord(BaseModel):
    """Instrumentation for one iteration of the matching approximation."""

    iteration: int
    vertices_before: int
    vertices_after: int
    matched_edges: int
    bp_rounds: int
    mm_rounds: int
    announce_rounds: int = 1


class ApproxTrace(BaseModel):
    """Instrumentation produced by an instrumented approximation run."""

    n: int = Field(description="Non-isolated vertices present before the first iteration")
    iterations: list[IterationRecord] = Field(default_factory=list)

    @property
    def total_rounds(self) -> int:
        return sum(r.bp_rounds + r.mm_rounds + r.announce_rounds for r in self.iterations)

    def residuals(self) -> list[float]:
        fractions = [1.0]
        for record in self.iterations:
            fractions.append(record.vertices_after / self.n if self.n else 0.0)
        return fractions


class ApproxResult(BaseModel):
    """Matching produced by the approximation plus its instrumentation."""

    matching: Matching
    config: ApproxConfig
    trace: ApproxTrace | None = None
