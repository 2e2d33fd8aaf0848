"""Seeded instance generators.

All randomness comes from numpy's PCG64 bit generator seeded directly with
the caller's 64-bit seed, so a seed pins the output across runs and machines.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .digraph import Digraph
from .reduction import Instance


class MixedDirectEdge(ValueError):
    pass


def _rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


@dataclass(frozen=True)
class PlantSpec:
    path_lengths: Sequence[int] = (2,)
    noise_vertices: int = 0
    noise_edges_per_vertex: float = 1.0
    seed: int = 0

    def __post_init__(self):
        _check_lengths(self.path_lengths)
        if self.noise_vertices < 0:
            raise ValueError("noise_vertices must be >= 0")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must fit in 64 bits")


def _check_lengths(path_lengths: Sequence[int]) -> None:
    if not path_lengths:
        raise ValueError("a pumpkin needs at least one path")
    if any(n < 1 for n in path_lengths):
        raise ValueError("path lengths must be >= 1")
    if 1 in path_lengths and len(path_lengths) > 1:
        raise MixedDirectEdge("the direct s->t arc cannot coexist with longer paths")


def make_pumpkin(path_lengths: Sequence[int]) -> tuple[Digraph, int, int]:
    """Source 0, interior vertices numbered path by path, sink last."""
    _check_lengths(path_lengths)
    n = 2 + sum(length - 1 for length in path_lengths)
    s, t = 0, n - 1
    edges = []
    nxt = 1
    for length in path_lengths:
        prev = s
        for _ in range(length - 1):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((prev, t))
    return Digraph.from_edges(n, edges), s, t


def plant_noise(g: Digraph, s: int, t: int, spec: PlantSpec) -> Instance:
    """Attach ``spec.noise_vertices`` fresh vertices and set k to that count.

    Each new vertex draws out-arcs among earlier vertices other than s and
    in-arcs among earlier vertices other than t; per direction the count is
    binomial with mean ``noise_edges_per_vertex``.  Deleting the new vertices
    restores ``g``, so the optimum never exceeds the planted k.
    """
    rng = _rng(spec.seed)
    n = g.capacity
    r = spec.noise_vertices
    edges = list(g.edges())
    for x in range(n, n + r):
        pool = np.array([v for v in range(x) if v in g.alive or v >= n], dtype=np.int64)
        for direction in ("out", "in"):
            elig = pool[pool != (s if direction == "out" else t)]
            if len(elig) == 0:
                continue
            p = min(1.0, spec.noise_edges_per_vertex / len(elig))
            count = int(rng.binomial(len(elig), p))
            picked = np.sort(rng.choice(elig, size=count, replace=False))
            for v in picked.tolist():
                edges.append((x, v) if direction == "out" else (v, x))
    planted = Digraph.from_edges(n + r, edges)
    dead = [v for v in range(n) if v not in g.alive]
    planted = planted.delete_vertices(dead)
    return Instance(planted, r, s, t)


def planted_instance(spec: PlantSpec) -> Instance:
    g, s, t = make_pumpkin(spec.path_lengths)
    return plant_noise(g, s, t, spec)


def random_digraph(n: int, p: float, seed: int) -> Digraph:
    """Each ordered pair u != v (lexicographic order) gets an arc with probability p."""
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must lie in [0, 1]")
    draws = _rng(seed).random(n * (n - 1)) if n > 1 else np.empty(0)
    edges = []
    i = 0
    for u in range(n):
        for v in range(n):
            if u == v:
                continue
            if draws[i] < p:
                edges.append((u, v))
            i += 1
    return Digraph.from_edges(n, edges)
