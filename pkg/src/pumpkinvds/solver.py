"""Branch-and-reduce search for the restricted and unrestricted problems."""
from __future__ import annotations

import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Optional

from .branching import RULE_ORDER, BranchDecision, RuleId, select_branch
from .digraph import Digraph
from .recognizer import is_pumpkin
from .reduction import REDUCTION_RULES, Decided, Instance, reduce_exhaustively


class SolverError(RuntimeError):
    """Internal inconsistency: incomplete rule set, bad certificate, depth overrun."""


@dataclass(frozen=True)
class Solution:
    deleted: frozenset[int]

    def sorted(self) -> list[int]:
        return sorted(self.deleted)

    def __len__(self) -> int:
        return len(self.deleted)


@dataclass
class SearchStats:
    nodes: int = 0
    leaves: int = 0
    max_depth: int = 0
    rule_firings: dict[RuleId, int] = field(default_factory=lambda: dict.fromkeys(RULE_ORDER, 0))
    reductions: dict[str, int] = field(default_factory=lambda: dict.fromkeys(REDUCTION_RULES, 0))

    def merge(self, other: SearchStats) -> None:
        self.nodes += other.nodes
        self.leaves += other.leaves
        self.max_depth = max(self.max_depth, other.max_depth)
        for r, c in other.rule_firings.items():
            self.rule_firings[r] = self.rule_firings.get(r, 0) + c
        for r, c in other.reductions.items():
            self.reductions[r] = self.reductions.get(r, 0) + c

    def as_dict(self) -> dict:
        return {
            "nodes": self.nodes,
            "leaves": self.leaves,
            "max_depth": self.max_depth,
            "rule_firings": {str(r): self.rule_firings.get(r, 0) for r in RULE_ORDER},
            "reductions": {r: self.reductions.get(r, 0) for r in REDUCTION_RULES},
        }


# Called as observer(instance, decision) at every branching node.
BranchObserver = Callable[[Instance, BranchDecision], None]


def solve_rpvds(
    inst: Instance, observer: Optional[BranchObserver] = None
) -> tuple[Optional[Solution], SearchStats]:
    """Decide the restricted instance; a returned Solution is a verified certificate.

    The budget is first capped at n - 2, which never changes the answer.
    """
    stats = SearchStats()
    root = Instance(inst.g, min(inst.k, len(inst.g) - 2), inst.s, inst.t)
    limit = max(root.k, 0) + 1
    if sys.getrecursionlimit() < limit + 100:
        sys.setrecursionlimit(limit + 100)

    def search(node: Instance, depth: int) -> Optional[frozenset[int]]:
        if depth > limit:
            raise SolverError(f"recursion depth {depth} exceeds k+1 = {limit}")
        stats.nodes += 1
        stats.max_depth = max(stats.max_depth, depth)
        outcome = reduce_exhaustively(node, stats.reductions)
        if isinstance(outcome, Decided):
            stats.leaves += 1
            return outcome.partial if outcome.yes else None
        reduced = outcome.instance
        decision = select_branch(reduced)
        if decision is None:
            raise SolverError("no reduction or branching rule applies to an undecided instance")
        stats.rule_firings[decision.rule] += 1
        if observer is not None:
            observer(reduced, decision)
        for branch in decision.sets:
            found = search(reduced.without(branch), depth + 1)
            if found is not None:
                return found | branch | outcome.forced
        return None

    found = search(root, 0)
    if found is None:
        return None, stats
    sol = Solution(frozenset(found))
    verify_certificate(inst, sol)
    return sol, stats


def verify_certificate(inst: Instance, sol: Solution) -> None:
    if len(sol.deleted) > inst.k:
        raise SolverError(f"certificate of size {len(sol.deleted)} exceeds k = {inst.k}")
    if inst.s in sol.deleted or inst.t in sol.deleted:
        raise SolverError("certificate deletes a terminal")
    verdict = is_pumpkin(inst.g.delete_vertices(sol.deleted), inst.s, inst.t)
    if not verdict:
        raise SolverError(f"certificate leaves a non-pumpkin: {verdict.violation}")


@dataclass(frozen=True)
class PvdsResult:
    s: int
    t: int
    solution: Solution


def _solve_pair(args):
    g, k, s, t = args
    return solve_rpvds(Instance(g, k, s, t))


def solve_pvds(
    g: Digraph, k: int, jobs: int = 1, stats: Optional[SearchStats] = None
) -> Optional[PvdsResult]:
    """Try every ordered terminal pair in ascending order; first success wins.

    ``stats``, when given, absorbs the statistics of every pair up to and
    including the winning one, so it does not depend on ``jobs``.
    """
    verts = g.vertices()
    pairs = [(s, t) for s in verts for t in verts if s != t]
    if jobs > 1 and len(pairs) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [pool.submit(_solve_pair, (g, k, s, t)) for s, t in pairs]
            try:
                for (s, t), fut in zip(pairs, futures):
                    sol, st = fut.result()
                    if stats is not None:
                        stats.merge(st)
                    if sol is not None:
                        return PvdsResult(s, t, sol)
            finally:
                for fut in futures:
                    fut.cancel()
        return None
    for s, t in pairs:
        sol, st = solve_rpvds(Instance(g, k, s, t))
        if stats is not None:
            stats.merge(st)
        if sol is not None:
            return PvdsResult(s, t, sol)
    return None
