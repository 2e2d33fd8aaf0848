"""Reduction rules R1-R9 for the restricted problem (fixed source and sink).

R1-R8 are the classical rules; R9 handles a present s->t arc, which no other
rule resolves: once s->t survives, the only pumpkin left is the bare arc, so
every other vertex must go.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .digraph import Digraph
from .recognizer import is_pumpkin

REDUCTION_RULES = ("R1", "R2", "R3", "R4", "R5", "R6", "R7", "R8", "R9")


@dataclass(frozen=True)
class Instance:
    g: Digraph
    k: int
    s: int
    t: int

    def __post_init__(self):
        if self.s == self.t:
            raise ValueError("source and sink must differ")
        for v in (self.s, self.t):
            if v not in self.g:
                raise ValueError(f"terminal {v} is not alive")

    def without(self, doomed) -> Instance:
        doomed = frozenset(doomed)
        return Instance(self.g.delete_vertices(doomed), self.k - len(doomed), self.s, self.t)


@dataclass(frozen=True)
class Answer:
    rule: str
    yes: bool
    forced: frozenset[int] = frozenset()


@dataclass(frozen=True)
class Delete:
    rule: str
    vertex: int


RuleAction = Union[Answer, Delete]


@dataclass(frozen=True)
class Decided:
    yes: bool
    partial: frozenset[int]


@dataclass(frozen=True)
class Reduced:
    instance: Instance
    forced: frozenset[int]


ReductionOutcome = Union[Decided, Reduced]


def direct_arc_answer(n_alive: int, k: int) -> bool:
    """Answer for an instance containing the arc s->t.

    The single arc counts as a pumpkin, so the instance is solvable iff all
    n-2 non-terminal vertices fit in the budget.
    """
    return n_alive - 2 <= k


def reduction_step(inst: Instance) -> Optional[RuleAction]:
    """First applicable rule in order R1..R9, or None at a fixpoint."""
    g, k, s, t = inst.g, inst.k, inst.s, inst.t
    if k < 0:
        return Answer("R1", False)
    pumpkin = is_pumpkin(g, s, t).is_pumpkin
    if k == 0 and not pumpkin:
        return Answer("R2", False)
    if pumpkin:
        return Answer("R3", True)

    from_s = g.reachable_from(s)
    cand = [v for v in g.alive if v not in from_s and v != t]
    if cand:
        return Delete("R4", min(cand))

    to_t = g.reaching(t)
    cand = [v for v in g.alive if v not in to_t and v != s]
    if cand:
        return Delete("R5", min(cand))

    preds = g.in_set(s)
    if preds:
        # t->s can never be removed; no pumpkin with these terminals exists.
        if t in preds:
            return Answer("R6", False)
        return Delete("R6", min(preds))

    succs = g.out_set(t)
    if succs:
        if s in succs:
            return Answer("R7", False)
        return Delete("R7", min(succs))

    if t not in from_s:
        return Answer("R8", False)

    if g.has_edge(s, t) and len(g) > 2:
        if direct_arc_answer(len(g), k):
            return Answer("R9", True, frozenset(g.alive - {s, t}))
        return Answer("R9", False)
    return None


def reduce_exhaustively(inst: Instance, counts: Optional[dict] = None) -> ReductionOutcome:
    """Apply reduction_step to a fixpoint, collecting forced deletions.

    ``counts``, when given, is incremented per fired rule name.
    """
    forced: list[int] = []
    while True:
        action = reduction_step(inst)
        if action is None:
            return Reduced(inst, frozenset(forced))
        if counts is not None:
            counts[action.rule] = counts.get(action.rule, 0) + 1
        if isinstance(action, Answer):
            partial = frozenset(forced) | action.forced if action.yes else frozenset(forced)
            return Decided(action.yes, partial)
        forced.append(action.vertex)
        inst = inst.without((action.vertex,))
