"""Branching rules (1)-(8) and their mirrored variants (2')-(8').

A mirrored rule is the plain rule evaluated on the reversed graph with source
and sink swapped; its branch sets need no translation since vertex ids are
shared.  Rules are tried in the order (1), (2), (2'), (3), (3'), ..., (8').

Every selector assumes the instance is reduced (no reduction rule applies)
and k >= 1.  Ties are broken by ascending vertex id throughout.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Callable, Optional

from .digraph import Digraph
from .reduction import Instance


class InternalRuleOrderViolation(RuntimeError):
    """A rule's witness could not be found although earlier rules were inapplicable."""


@dataclass(frozen=True, order=True)
class RuleId:
    index: int
    primed: bool = False

    def __post_init__(self):
        if not 1 <= self.index <= 8:
            raise ValueError(f"no branching rule {self.index}")
        if self.index == 1 and self.primed:
            raise ValueError("rule 1 has no mirrored variant")

    def __str__(self) -> str:
        return f"{self.index}'" if self.primed else str(self.index)

    @classmethod
    def parse(cls, text: str) -> RuleId:
        text = text.strip().strip("()")
        if text.endswith("'"):
            return cls(int(text[:-1]), True)
        return cls(int(text))


RULE_ORDER: tuple[RuleId, ...] = (RuleId(1),) + tuple(
    RuleId(i, p) for i in range(2, 9) for p in (False, True)
)

GUARANTEED_VECTORS: dict[int, tuple[int, ...]] = {
    1: (1, 1),
    2: (1, 1),
    3: (1, 3, 3, 3, 3),
    4: (1, 1),
    5: (1, 1),
    6: (1, 3, 3, 2),
    7: (1, 2, 2),
    8: (1, 2, 2),
}


@dataclass(frozen=True)
class RuleSpec:
    rule: RuleId
    guaranteed_vector: tuple[int, ...]


def rule_spec(rule: RuleId) -> RuleSpec:
    return RuleSpec(rule, GUARANTEED_VECTORS[rule.index])


@dataclass(frozen=True)
class BranchDecision:
    rule: RuleId
    pivot: int
    sets: tuple[frozenset[int], ...]

    def sizes(self) -> tuple[int, ...]:
        return tuple(len(x) for x in self.sets)


# A rule body receives (g, s, t, irregular, build).  With build=False it only
# evaluates the guard and returns True/None; otherwise (pivot, sets) or None.

def _rule1(g: Digraph, s, t, irregular, build):
    best = None
    for u in g.alive:
        if u == s or u == t:
            continue
        partners = g.out_set(u) & g.in_set(u)
        for v in partners:
            if v > u and v != s and v != t and (best is None or (u, v) < best):
                best = (u, v)
    if best is None:
        return None
    if not build:
        return True
    u, v = best
    return u, [{u}, {v}]


def _rule2(g, s, t, irregular, build):
    for v in irregular:
        out = g.out_set(v)
        if len(out) >= 2 and t in out:
            return True if not build else (v, [{v}, set(out) - {t}])
    return None


def _rule3(g, s, t, irregular, build):
    for v in irregular:
        if g.out_degree(v) >= 4:
            if not build:
                return True
            ws = sorted(g.out_set(v))[:4]
            return v, [{v}] + [set(ws) - {w} for w in ws]
    return None


def _rule4(g, s, t, irregular, build):
    for v in irregular:
        out = g.out_set(v)
        if len(out) < 2:
            continue
        for w in sorted(out):
            if g.in_degree(w) == 1:
                return True if not build else (v, [{w}, set(out) - {w}])
    return None


def _rule5(g, s, t, irregular, build):
    for v in irregular:
        out = g.out_set(v)
        if len(out) < 2:
            continue
        for w1 in sorted(out):
            succ = g.out_set(w1)
            if len(succ) == 1 and next(iter(succ)) in out:
                return True if not build else (v, [{v}, {w1}])
    return None


def _rule6(g, s, t, irregular, build):
    for v in irregular:
        out = g.out_set(v)
        if len(out) != 3:
            continue
        ws = sorted(out)
        qual = [w for w in ws if not (g.in_set(w) - {v}) <= out]
        if len(qual) < 2:
            continue
        if not build:
            return True
        w1, w2 = qual[:2]
        (w3,) = set(ws) - {w1, w2}
        return v, [
            {v},
            {w2, w3} | (g.in_set(w1) - {v}),
            {w1, w3} | (g.in_set(w2) - {v}),
            {w1, w2},
        ]
    return None


def _rule7(g, s, t, irregular, build):
    for v in irregular:
        out = g.out_set(v)
        if len(out) != 3:
            continue
        if not build:
            return True
        for w1, w2, w3 in permutations(sorted(out)):
            if g.in_set(w2) == {v, w1}:
                return v, [{w2}, {w1, w3}, {v} | (g.out_set(w1) - {w2})]
        raise InternalRuleOrderViolation(f"rule 7: no labeling of N+({v}) = {sorted(out)}")
    return None


def _rule8(g, s, t, irregular, build):
    pivots = [v for v in irregular if g.out_degree(v) == 2]
    if not pivots:
        return None
    if not build:
        return True
    dist = g.bfs_distances(s)
    inf = len(g.alive) + 1
    v = min(pivots, key=lambda u: (dist.get(u, inf), u))
    a, b = sorted(g.out_set(v))
    if not g.has_edge(a, b):
        w1, w2 = a, b
    elif not g.has_edge(b, a):
        w1, w2 = b, a
    else:
        raise InternalRuleOrderViolation(f"rule 8: antiparallel out-neighbors of {v}")
    others = g.in_set(w2) - {v}
    if len(others) != 1:
        raise InternalRuleOrderViolation(f"rule 8: d-({w2}) != 2")
    (x,) = others
    if g.out_degree(x) != 2:
        raise InternalRuleOrderViolation(f"rule 8: d+({x}) != 2")
    (y,) = g.out_set(x) - {w2}
    if y == v:
        raise InternalRuleOrderViolation(f"rule 8: y == v == {v}")
    return v, [{w2}, {w1, x}, {v, y}]


_RULES: dict[int, Callable] = {
    1: _rule1, 2: _rule2, 3: _rule3, 4: _rule4,
    5: _rule5, 6: _rule6, 7: _rule7, 8: _rule8,
}


class _Views:
    """Plain and reversed orientations sharing one irregular-vertex list."""

    def __init__(self, inst: Instance):
        g, s, t = inst.g, inst.s, inst.t
        self.plain = (g, s, t)
        self.mirror = (g.reverse(), t, s)
        # Rules (2)-(8) pivot on a vertex with out-degree >= 2 (in-degree when
        # mirrored), so only vertices off the 1-in/1-out pattern can qualify.
        self.irregular = sorted(
            v for v in g.alive
            if v != s and v != t and (g.in_degree(v) != 1 or g.out_degree(v) != 1)
        )

    def run(self, rule: RuleId, build: bool):
        g, s, t = self.mirror if rule.primed else self.plain
        return _RULES[rule.index](g, s, t, self.irregular, build)


def select_branch(inst: Instance) -> Optional[BranchDecision]:
    """Decision of the first applicable branching rule, or None."""
    views = _Views(inst)
    for rule in RULE_ORDER:
        found = views.run(rule, True)
        if found is None:
            continue
        pivot, sets = found
        decision = BranchDecision(rule, pivot, tuple(frozenset(x) for x in sets))
        _check_hygiene(inst, decision)
        return decision
    return None


def applicable_rules(inst: Instance) -> list[RuleId]:
    """Every rule whose guard holds, in canonical order (diagnostics)."""
    views = _Views(inst)
    return [rule for rule in RULE_ORDER if views.run(rule, False)]


def _check_hygiene(inst: Instance, d: BranchDecision) -> None:
    vec = GUARANTEED_VECTORS[d.rule.index]
    if len(d.sets) != len(vec):
        raise InternalRuleOrderViolation(f"rule {d.rule}: arity {len(d.sets)}")
    for x, need in zip(d.sets, vec):
        if len(x) < need or inst.s in x or inst.t in x or not x <= inst.g.alive:
            raise InternalRuleOrderViolation(
                f"rule {d.rule} at {d.pivot}: bad branch set {sorted(x)}"
            )
