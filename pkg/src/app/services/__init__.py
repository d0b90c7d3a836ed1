"""Services orchestrating placement, matching, stabilization and experiments."""
from .experiment_orchestrator import ExperimentOrchestrator, get_orchestrator
from .matching_service import (
    approx_record,
    bp_mm_once,
    forest_decomposition,
    is_maximal_matching,
    maximal_matching_pr,
    mcm_approx,
    residual_fraction,
    run_mcm_approx,
    three_color_forest,
)
from .placement_service import (
    placement_load,
    relabel_placement,
    run_backup_placement,
    selected_subgraph,
    validate_placement,
)
from .stabilization_service import (
    check_ram_independence,
    run_self_stab,
    run_self_stab_bp,
    run_self_stab_composed,
    stabilization_time,
)

__all__ = [
    "ExperimentOrchestrator",
    "approx_record",
    "bp_mm_once",
    "check_ram_independence",
    "forest_decomposition",
    "get_orchestrator",
    "is_maximal_matching",
    "maximal_matching_pr",
    "mcm_approx",
    "placement_load",
    "relabel_placement",
    "residual_fraction",
    "run_backup_placement",
    "run_mcm_approx",
    "run_self_stab",
    "run_self_stab_bp",
    "run_self_stab_composed",
    "selected_subgraph",
    "stabilization_time",
    "three_color_forest",
    "validate_placement",
]
