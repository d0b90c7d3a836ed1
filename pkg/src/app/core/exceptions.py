"""Domain exceptions for the simulator."""


class SimulationError(Exception):
    """Base class for all errors raised by the simulator."""


class GraphParseError(SimulationError, ValueError):
    """Raised when an edge-list file contains a malformed line."""

    def __init__(self, message: str, line_number: int):
        """Initialize the parse error.

        Args:
            message: Description of the problem, including the line number.
            line_number: 1-based line number of the offending line.
        """
        super().__init__(message)
        self.line_number = line_number


class GraphValidationError(SimulationError):
    """Raised when a graph violates symmetry, self-loop or closure rules."""


class OracleInfeasibleError(SimulationError, RuntimeError):
    """Raised when an exact oracle would exceed its size guard."""


class IsolatedVertexError(SimulationError, ValueError):
    """Raised when a vertex without neighbors has to select one."""

    def __init__(self, message: str, vertices: list[int] | None = None):
        super().__init__(message)
        self.vertices = vertices or []


class InvalidPlacementError(SimulationError, ValueError):
    """Raised when a placement does not fit its graph."""


class InvalidMatchingError(SimulationError):
    """Raised when a matching is not vertex-disjoint or leaves the graph."""


class DegreeBoundError(SimulationError, ValueError):
    """Raised when a graph exceeds the degree bound a program was built for."""


class CyclicForestError(SimulationError, ValueError):
    """Raised when a parent map is not a rooted forest."""


class IncompleteTraceError(SimulationError, RuntimeError):
    """Raised when a result is read from a run that did not finish."""


class UnstabilizedError(SimulationError, RuntimeError):
    """Raised when a stabilization report never reached a legal state."""
