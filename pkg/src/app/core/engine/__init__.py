"""Synchronous round engine."""
from src.app.core.engine.base import NodeProgram, StepResult
from src.app.core.engine.simulator import SyncSimulator, log_star, round_count, run_sync

__all__ = ["NodeProgram", "StepResult", "SyncSimulator", "log_star", "round_count", "run_sync"]
