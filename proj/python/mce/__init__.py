"""Maximal clique enumeration in sparse graphs, parametrized by degeneracy."""

from ._core import (
    ContractError,
    DegeneracyOrdering,
    EnumerationStats,
    Graph,
    ParseError,
    SizeError,
    check_edge_bound,
    common_neighborhood,
    complete_graph,
    degeneracy_ordering,
    empty_graph,
    enumerate_degeneracy,
    enumerate_naive,
    enumerate_oracle,
    enumerate_pivot,
    enumerate_subsets_degeneracy,
    is_maximal_clique,
    later_earlier_split,
    lower_bound_graph,
    max_clique_count_bound,
    maximal_cliques,
    moon_moser_graph,
    neighborhood,
    path_graph,
    random_gnp,
)

__all__ = [name for name in dir() if not name.startswith("_")]
