"""Pumpkin recognition with a prescribed source and sink.

A digraph is a pumpkin with source ``s`` and sink ``t`` exactly when

  (i)   s != t,
  (ii)  s has no in-arcs and t has no out-arcs,
  (iii) every other vertex has in-degree 1 and out-degree 1,
  (iv)  every vertex is reachable from s,
  (v)   if the arc s->t is present, s and t are the only vertices.

Condition (v) is what makes the paths induced: a direct s->t arc would be a
chord of any longer s-t path.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .digraph import Digraph


@dataclass(frozen=True)
class Violation:
    tag: str
    vertex: Optional[int] = None

    def __str__(self) -> str:
        return self.tag if self.vertex is None else f"{self.tag}({self.vertex})"


SOURCE_EQUALS_SINK = "SourceEqualsSink"
BAD_SOURCE_DEGREE = "BadSourceDegree"
BAD_SINK_DEGREE = "BadSinkDegree"
BAD_INTERNAL_DEGREE = "BadInternalDegree"
NO_PATH = "NoPath"
UNREACHABLE = "Unreachable"
DIRECT_EDGE_WITH_INTERNALS = "DirectEdgeWithInternals"


@dataclass(frozen=True)
class PumpkinVerdict:
    violation: Optional[Violation] = None

    @property
    def is_pumpkin(self) -> bool:
        return self.violation is None

    def __bool__(self) -> bool:
        return self.is_pumpkin


def is_pumpkin(g: Digraph, s: int, t: int) -> PumpkinVerdict:
    """Check conditions (i)-(v) in order and report the first failure.

    Within a condition the smallest offending vertex id is reported.  When t
    itself is unreachable the verdict is ``NoPath`` rather than
    ``Unreachable(t)``.
    """
    g._check(s)
    g._check(t)
    if s == t:
        return PumpkinVerdict(Violation(SOURCE_EQUALS_SINK))
    if g.in_degree(s) != 0:
        return PumpkinVerdict(Violation(BAD_SOURCE_DEGREE, s))
    if g.out_degree(t) != 0:
        return PumpkinVerdict(Violation(BAD_SINK_DEGREE, t))
    bad = [
        v
        for v in g.alive
        if v != s and v != t and (g.in_degree(v) != 1 or g.out_degree(v) != 1)
    ]
    if bad:
        return PumpkinVerdict(Violation(BAD_INTERNAL_DEGREE, min(bad)))
    reach = g.reachable_from(s)
    if t not in reach:
        return PumpkinVerdict(Violation(NO_PATH))
    if len(reach) != len(g):
        return PumpkinVerdict(Violation(UNREACHABLE, min(g.alive - reach)))
    if g.has_edge(s, t) and len(g) > 2:
        return PumpkinVerdict(Violation(DIRECT_EDGE_WITH_INTERNALS))
    return PumpkinVerdict()


def is_pumpkin_by_paths(g: Digraph, s: int, t: int) -> bool:
    """Definition-literal check, exponential; meant for graphs with <= 8 vertices.

    Enumerates every simple s->t path that is induced in ``g``, then searches
    for a family of them with pairwise disjoint interiors whose union
    (vertices and arcs) is all of ``g``.
    """
    if s == t:
        return False
    edges = set(g.edges())
    paths = list(_induced_paths(g, s, t))
    direct = [p for p in paths if len(p) == 2]
    longer = [p for p in paths if len(p) > 2]
    interiors = set(g.alive) - {s, t}
    by_vertex: dict[int, list[tuple[int, ...]]] = {v: [] for v in interiors}
    for p in longer:
        for v in p[1:-1]:
            by_vertex[v].append(p)

    def cover(uncovered: frozenset[int], chosen: list) -> bool:
        if not uncovered:
            for use_direct in ([False, True] if direct else [False]):
                family = chosen + (direct if use_direct else [])
                if not family:
                    continue
                arcs = {a for p in family for a in zip(p, p[1:])}
                if arcs == edges:
                    return True
            return False
        v = min(uncovered)
        for p in by_vertex[v]:
            inner = frozenset(p[1:-1])
            if inner <= uncovered:
                if cover(uncovered - inner, chosen + [p]):
                    return True
        return False

    return cover(frozenset(interiors), [])


def _induced_paths(g: Digraph, s: int, t: int):
    """Simple s->t paths whose vertex set induces exactly the path's arcs.

    A prefix that already carries a chord stays non-induced under every
    extension, so such prefixes are dropped early.
    """
    stack = [(s, (s,))]
    while stack:
        u, path = stack.pop()
        if u == t:
            yield path
            continue
        for w in g.out_neighbors(u):
            if w in path:
                continue
            earlier = path[:-1]
            if any(g.has_edge(w, x) or g.has_edge(x, w) for x in earlier) or g.has_edge(w, u):
                continue
            stack.append((w, path + (w,)))
