"""Brute-force ground truth.

Subsets are tried by size and, within a size, in colex order of sorted ids;
each candidate is checked with the recognizer only, never with the solver's
rules.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Optional

from .digraph import Digraph
from .recognizer import is_pumpkin
from .reduction import Instance

RPVDS_LIMIT = 16
PVDS_LIMIT = 12


class TooLarge(ValueError):
    pass


@dataclass(frozen=True)
class OracleResult:
    yes: bool
    min_size: Optional[int] = None
    witness: Optional[frozenset[int]] = None
    s: Optional[int] = None
    t: Optional[int] = None


def colex_subsets(items: list[int], size: int) -> Iterator[tuple[int, ...]]:
    """``size``-subsets of sorted ``items`` in colexicographic order."""
    yield from sorted(combinations(sorted(items), size), key=lambda c: c[::-1])


def brute_force_rpvds(inst: Instance, force: bool = False) -> OracleResult:
    g, s, t = inst.g, inst.s, inst.t
    if len(g) > RPVDS_LIMIT and not force:
        raise TooLarge(f"{len(g)} vertices exceeds oracle limit {RPVDS_LIMIT}")
    rest = sorted(g.alive - {s, t})
    for size in range(0, min(inst.k, len(rest)) + 1):
        for subset in colex_subsets(rest, size):
            if is_pumpkin(g.delete_vertices(subset), s, t):
                return OracleResult(True, size, frozenset(subset), s, t)
    return OracleResult(False, s=s, t=t)


def brute_force_pvds(g: Digraph, k: int, force: bool = False) -> OracleResult:
    """Smallest witness over all ordered terminal pairs; ties go to the first pair."""
    if len(g) > PVDS_LIMIT and not force:
        raise TooLarge(f"{len(g)} vertices exceeds oracle limit {PVDS_LIMIT}")
    best = OracleResult(False)
    verts = g.vertices()
    for s in verts:
        for t in verts:
            if s == t:
                continue
            res = brute_force_rpvds(Instance(g, k, s, t), force=True)
            if res.yes and (not best.yes or res.min_size < best.min_size):
                best = res
    return best
