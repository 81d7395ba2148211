"""Minimum-repeat Hamiltonian walks: exact, tree, reduction and heuristic solvers."""
from .errors import BudgetExceeded, GraphFormatError, NotConnectedError, SearchStuck
from .graph import (Graph, complete_graph, cut_vertices, cut_vertices_by_removal,
                    cycle_graph, path_graph, star_graph)
from .io import emit_edge_list, emit_walk, parse_edge_list, parse_tsplib_hcp, parse_walk, read_graph
from .generators import gen_generalized_petersen, gen_random_connected, gen_random_tree
from .walks import VerificationReport, normalize_walk, rotate_head, rotate_tail, verify_walk
from .bfs import zero_one_bfs
from .exact import ExactResult, feasible_with_unbounded, solve_exact
from .oracle import exhaustive_oracle
from .trees import tree_cycle, tree_path
from .reductions import (AtspInstance, HcpInstance, atsp_tour_to_walk, emit_tsplib_atsp,
                         find_hamiltonian_cycle, hcp_cycle_to_walk, petersen_construction,
                         to_atsp_instance, to_hcp_instance, walk_to_atsp_tour)
from .heuristic import (HeuristicConfig, SearchState, SolveReport, mark_cut_unbounded,
                        path_to_cycle, preemptive_cycle_check, reroute, solve_heuristic)

__all__ = [name for name in dir() if not name.startswith("_")]
