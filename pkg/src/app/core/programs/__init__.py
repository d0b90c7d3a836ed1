"""Node programs run by the synchronous simulator."""
from src.app.core.programs.backup_placement import BackupPlacementProgram, next_modulo
from src.app.core.programs.factory import ProgramFactory
from src.app.core.programs.forest_coloring import ForestColoringProgram, cv_iterations
from src.app.core.programs.maximal_matching import NO_PARTNER, ForestMatchingProgram
from src.app.core.programs.self_stabilizing import (
    ComposedProgram,
    ConstantPayload,
    DegreeEchoPayload,
    PayloadProgram,
    SelfStabBackupPlacementProgram,
    StabNodeState,
    compose_bp_then,
)

__all__ = [
    "NO_PARTNER",
    "BackupPlacementProgram",
    "ComposedProgram",
    "ConstantPayload",
    "DegreeEchoPayload",
    "ForestColoringProgram",
    "ForestMatchingProgram",
    "PayloadProgram",
    "ProgramFactory",
    "SelfStabBackupPlacementProgram",
    "StabNodeState",
    "compose_bp_then",
    "cv_iterations",
    "next_modulo",
]
