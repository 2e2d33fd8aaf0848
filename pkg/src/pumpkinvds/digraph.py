"""Immutable simple digraph over dense integer vertex ids.

Deleted vertices keep their slot (ids stay stable across recursion), so a
graph carries a ``capacity`` and an alive mask.  Every mutating operation
returns a fresh value; untouched adjacency sets are shared between values,
which keeps vertex deletion cheap on large graphs.
"""
from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator


class GraphError(ValueError):
    """Base class for malformed graph input."""


class SelfLoop(GraphError):
    def __init__(self, u: int):
        super().__init__(f"self-loop on vertex {u}")
        self.vertex = u


class DuplicateEdge(GraphError):
    def __init__(self, u: int, v: int):
        super().__init__(f"duplicate arc {u}->{v}")
        self.edge = (u, v)


class OutOfRange(GraphError):
    def __init__(self, u: int, n: int):
        super().__init__(f"vertex {u} outside [0, {n})")
        self.vertex = u


class DeadVertex(GraphError):
    def __init__(self, u: int):
        super().__init__(f"vertex {u} is not alive")
        self.vertex = u


_EMPTY: frozenset[int] = frozenset()


class Digraph:
    __slots__ = ("_out", "_in", "_alive")

    def __init__(self, out_adj, in_adj, alive: frozenset[int]):
        # Internal constructor; use from_edges. Dead slots hold None.
        self._out = out_adj
        self._in = in_adj
        self._alive = alive

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Digraph:
        if n < 0:
            raise GraphError(f"negative vertex count {n}")
        out: list[set[int]] = [set() for _ in range(n)]
        inn: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            for x in (u, v):
                if not 0 <= x < n:
                    raise OutOfRange(x, n)
            if u == v:
                raise SelfLoop(u)
            if v in out[u]:
                raise DuplicateEdge(u, v)
            out[u].add(v)
            inn[v].add(u)
        return cls(
            tuple(frozenset(a) for a in out),
            tuple(frozenset(a) for a in inn),
            frozenset(range(n)),
        )

    # -- queries ---------------------------------------------------------

    @property
    def capacity(self) -> int:
        return len(self._out)

    @property
    def alive(self) -> frozenset[int]:
        return self._alive

    def vertices(self) -> list[int]:
        """Live vertices in ascending order."""
        return sorted(self._alive)

    def __len__(self) -> int:
        return len(self._alive)

    def __contains__(self, v: object) -> bool:
        return v in self._alive

    def out_set(self, v: int) -> frozenset[int]:
        """Out-neighbors of ``v`` as an unordered frozenset (no copy)."""
        return self._out[v]

    def in_set(self, v: int) -> frozenset[int]:
        return self._in[v]

    def out_neighbors(self, v: int) -> list[int]:
        """Out-neighbors of ``v`` in ascending id order."""
        self._check(v)
        return sorted(self._out[v])

    def in_neighbors(self, v: int) -> list[int]:
        self._check(v)
        return sorted(self._in[v])

    def out_degree(self, v: int) -> int:
        return len(self._out[v])

    def in_degree(self, v: int) -> int:
        return len(self._in[v])

    def has_edge(self, u: int, v: int) -> bool:
        adj = self._out[u] if 0 <= u < len(self._out) else None
        return adj is not None and v in adj

    def edges(self) -> Iterator[tuple[int, int]]:
        """All arcs, sorted lexicographically."""
        for u in self.vertices():
            for v in sorted(self._out[u]):
                yield u, v

    def edge_count(self) -> int:
        return sum(len(self._out[u]) for u in self._alive)

    def _check(self, v: int) -> None:
        if v not in self._alive:
            raise DeadVertex(v)

    # -- transformations -------------------------------------------------

    def delete_vertices(self, doomed: Iterable[int]) -> Digraph:
        """Return G - S.  ``self`` is left untouched."""
        doomed = set(doomed)
        if not doomed:
            return self
        for v in doomed:
            self._check(v)
        out = list(self._out)
        inn = list(self._in)
        for v in doomed:
            for w in self._out[v]:
                if w not in doomed:
                    inn[w] = inn[w] - doomed
            for w in self._in[v]:
                if w not in doomed:
                    out[w] = out[w] - doomed
        for v in doomed:
            out[v] = None
            inn[v] = None
        return Digraph(tuple(out), tuple(inn), self._alive - doomed)

    def reverse(self) -> Digraph:
        """Every arc flipped.  O(1): the adjacency tables are swapped."""
        return Digraph(self._in, self._out, self._alive)

    def reachable_from(self, v: int) -> set[int]:
        self._check(v)
        return _search(self._out, v)

    def reaching(self, v: int) -> set[int]:
        """Vertices that can reach ``v`` (including ``v``)."""
        self._check(v)
        return _search(self._in, v)

    def bfs_distances(self, v: int) -> dict[int, int]:
        self._check(v)
        dist = {v: 0}
        queue = deque([v])
        out = self._out
        while queue:
            u = queue.popleft()
            d = dist[u] + 1
            for w in out[u]:
                if w not in dist:
                    dist[w] = d
                    queue.append(w)
        return dist

    # -- misc ------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Digraph):
            return NotImplemented
        return (
            self.capacity == other.capacity
            and self._alive == other._alive
            and all(self._out[v] == other._out[v] for v in self._alive)
        )

    def __hash__(self) -> int:
        return hash((self.capacity, self._alive, tuple(self.edges())))

    def __repr__(self) -> str:
        return f"Digraph(alive={self.vertices()}, edges={list(self.edges())})"


def _search(adj, root: int) -> set[int]:
    seen = {root}
    stack = [root]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Digraph:
    return Digraph.from_edges(n, edges)


def delete_vertices(g: Digraph, s: Iterable[int]) -> Digraph:
    return g.delete_vertices(s)


def reverse(g: Digraph) -> Digraph:
    return g.reverse()


def reachable_from(g: Digraph, v: int) -> set[int]:
    return g.reachable_from(v)


def bfs_distances(g: Digraph, v: int) -> dict[int, int]:
    return g.bfs_distances(v)
