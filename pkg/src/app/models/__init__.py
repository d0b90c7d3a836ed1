"""Domain models for the backup-placement simulator."""

from .experiment import (
    BENCH_COLUMNS,
    BenchRow,
    CheckResult,
    CheckStatus,
    ExitCode,
    ExperimentSpec,
    VerifyReport,
)
from .graph import Edge, Graph, GraphFamily, GraphFamilyParams, NodeId
from .matching import (
    ApproxConfig,
    ApproxResult,
    ApproxTrace,
    ForestDecomposition,
    IterationRecord,
    Matching,
    required_iterations,
)
from .placement import LoadReport, Placement
from .stabilization import (
    ComposedReport,
    FaultEvent,
    FaultMode,
    FaultSchedule,
    StabReport,
)
from .trace import ModelContext, RoundSnapshot, Trace

__all__ = [
    "BENCH_COLUMNS",
    "ApproxConfig",
    "ApproxResult",
    "ApproxTrace",
    "BenchRow",
    "CheckResult",
    "CheckStatus",
    "ComposedReport",
    "Edge",
    "ExitCode",
    "ExperimentSpec",
    "FaultEvent",
    "FaultMode",
    "FaultSchedule",
    "ForestDecomposition",
    "Graph",
    "GraphFamily",
    "GraphFamilyParams",
    "IterationRecord",
    "LoadReport",
    "Matching",
    "ModelContext",
    "NodeId",
    "Placement",
    "RoundSnapshot",
    "StabReport",
    "Trace",
    "VerifyReport",
    "required_iterations",
]
