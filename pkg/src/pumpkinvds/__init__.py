"""Exact branching solver for Pumpkin Vertex Deletion Set."""
from .branching import BranchDecision, RuleId, applicable_rules, select_branch
from .digraph import Digraph
from .oracle import OracleResult, brute_force_pvds, brute_force_rpvds
from .recognizer import PumpkinVerdict, is_pumpkin
from .reduction import Instance, reduce_exhaustively, reduction_step
from .solver import PvdsResult, SearchStats, Solution, solve_pvds, solve_rpvds

__all__ = [
    "BranchDecision", "Digraph", "Instance", "OracleResult", "PumpkinVerdict",
    "PvdsResult", "RuleId", "SearchStats", "Solution", "applicable_rules",
    "brute_force_pvds", "brute_force_rpvds", "is_pumpkin", "reduce_exhaustively",
    "reduction_step", "select_branch", "solve_pvds", "solve_rpvds",
]
