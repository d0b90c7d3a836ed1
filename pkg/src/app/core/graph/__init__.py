"""Graph generators and small-instance oracles."""
from src.app.core.graph.generators import (
    gen_line_graph,
    gen_random_gnp,
    gen_unit_ball,
    gen_unit_disk,
    generate,
)
from src.app.core.graph.oracles import (
    family_independence_bound,
    max_degree,
    mcm_augmenting_path,
    mcm_brute_force,
    neighborhood_independence,
    neighborhood_independence_sampled,
)

__all__ = [
    "family_independence_bound",
    "gen_line_graph",
    "gen_random_gnp",
    "gen_unit_ball",
    "gen_unit_disk",
    "generate",
    "max_degree",
    "mcm_augmenting_path",
    "mcm_brute_force",
    "neighborhood_independence",
    "neighborhood_independence_sampled",
]
