"""Repositories for graph files and experiment results."""
from .graph_repository import format_edge_list, load_graph, parse_edge_list, save_graph
from .results_repository import ResultsRepository, get_results_repository, to_json

__all__ = [
    "ResultsRepository",
    "format_edge_list",
    "get_results_repository",
    "load_graph",
    "parse_edge_list",
    "save_graph",
    "to_json",
]
