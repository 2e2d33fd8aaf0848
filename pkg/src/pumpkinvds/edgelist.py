"""Plain-text arc-list format.

    n m
    u v          (m lines, one arc u->v each)
    # comment

Comment lines may appear anywhere.  Three comments carry instance metadata
and are read back by :func:`parse`: ``# source S``, ``# sink T`` and
``# planted_k R``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Union

from .digraph import Digraph, GraphError

META_KEYS = ("source", "sink", "planted_k")


class ParseError(ValueError):
    pass


@dataclass
class EdgeListFile:
    graph: Digraph
    meta: dict[str, int] = field(default_factory=dict)

    @property
    def source(self) -> Optional[int]:
        return self.meta.get("source")

    @property
    def sink(self) -> Optional[int]:
        return self.meta.get("sink")

    @property
    def planted_k(self) -> Optional[int]:
        return self.meta.get("planted_k")


def parse(text: str, name: str = "<input>") -> EdgeListFile:
    header = None
    arcs: list[tuple[int, int]] = []
    meta: dict[str, int] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            words = line[1:].split()
            if len(words) == 2 and words[0] in META_KEYS and words[1].lstrip("-").isdigit():
                meta[words[0]] = int(words[1])
            continue
        words = line.split()
        try:
            pair = tuple(int(w) for w in words)
        except ValueError:
            raise ParseError(f"{name}:{lineno}: expected two integers, got {line!r}")
        if len(pair) != 2:
            raise ParseError(f"{name}:{lineno}: expected two integers, got {line!r}")
        if header is None:
            if pair[0] < 0 or pair[1] < 0:
                raise ParseError(f"{name}:{lineno}: negative count in header")
            header = pair
        else:
            arcs.append(pair)
    if header is None:
        raise ParseError(f"{name}: missing 'n m' header")
    n, m = header
    if len(arcs) != m:
        raise ParseError(f"{name}: header announces {m} arcs, found {len(arcs)}")
    try:
        g = Digraph.from_edges(n, arcs)
    except GraphError as e:
        raise ParseError(f"{name}: {e}") from e
    for key in ("source", "sink"):
        if key in meta and not 0 <= meta[key] < n:
            raise ParseError(f"{name}: {key} {meta[key]} outside [0, {n})")
    return EdgeListFile(g, meta)


def read(path: Union[str, Path]) -> EdgeListFile:
    path = Path(path)
    try:
        text = path.read_text()
    except (OSError, UnicodeDecodeError) as e:
        raise ParseError(f"{path}: {e}") from e
    return parse(text, str(path))


def dumps(g: Digraph, meta: Optional[dict[str, int]] = None) -> str:
    if len(g) != g.capacity:
        raise ValueError("cannot serialize a graph with deleted vertex slots")
    arcs = list(g.edges())
    lines = [f"{g.capacity} {len(arcs)}"]
    lines += [f"{u} {v}" for u, v in arcs]
    for key in META_KEYS:
        if meta and key in meta:
            lines.append(f"# {key} {meta[key]}")
    return "\n".join(lines) + "\n"


def write(path: Union[str, Path], g: Digraph, meta: Optional[dict[str, int]] = None) -> None:
    Path(path).write_text(dumps(g, meta))
