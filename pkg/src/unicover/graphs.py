"""Simple graphs and loopless digraphs on vertices 0..n-1, plus file formats.

The edge-list file format is a header line ``n=<N>`` followed by one ``u v``
line per edge with u < v; blank lines and '#' comments are allowed anywhere.
"""

from __future__ import annotations

from typing import IO, Iterable

from .errors import GraphFormatError

__all__ = [
    "SimpleGraph",
    "Digraph",
    "read_graph",
    "write_graph",
    "to_dot",
]


class SimpleGraph:
    """Undirected graph without loops or parallel edges."""

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be >= 0")
        seen: set[tuple[int, int]] = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise ValueError(f"parallel edge ({key[0]}, {key[1]})")
            seen.add(key)
        self.n = n
        self.edges: tuple[tuple[int, int], ...] = tuple(sorted(seen))
        neigh: list[list[int]] = [[] for _ in range(n)]
        for u, v in self.edges:
            neigh[u].append(v)
            neigh[v].append(u)
        self.adj: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(a)) for a in neigh)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.adj)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimpleGraph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"SimpleGraph(n={self.n}, edges={list(self.edges)})"


class Digraph:
    """Directed graph without loops; opposite arcs may coexist, each once."""

    def __init__(self, n: int, arcs: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be >= 0")
        seen: set[tuple[int, int]] = set()
        for u, v in arcs:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"arc ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if (u, v) in seen:
                raise ValueError(f"repeated arc ({u}, {v})")
            seen.add((u, v))
        self.n = n
        self.arcs: tuple[tuple[int, int], ...] = tuple(sorted(seen))
        out: list[list[int]] = [[] for _ in range(n)]
        indeg = [0] * n
        for u, v in self.arcs:
            out[u].append(v)
            indeg[v] += 1
        self.out_adj: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(a)) for a in out)
        self._in_degrees = tuple(indeg)

    def out_degree(self, v: int) -> int:
        return len(self.out_adj[v])

    def in_degree(self, v: int) -> int:
        return self._in_degrees[v]

    def bidegree_sequence(self) -> tuple[tuple[int, int], ...]:
        """(out, in) pair per vertex."""
        return tuple((len(self.out_adj[v]), self._in_degrees[v]) for v in range(self.n))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Digraph):
            return NotImplemented
        return self.n == other.n and self.arcs == other.arcs

    def __hash__(self) -> int:
        return hash((self.n, self.arcs))

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, arcs={list(self.arcs)})"


def read_graph(lines: Iterable[str]) -> SimpleGraph:
    """Parse the edge-list format; raises GraphFormatError with line numbers."""
    n: int | None = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if n is None:
            if not line.startswith("n="):
                raise GraphFormatError(f"line {lineno}: expected 'n=<count>' header")
            try:
                n = int(line[2:])
            except ValueError:
                raise GraphFormatError(f"line {lineno}: bad vertex count {line[2:]!r}") from None
            if n < 0:
                raise GraphFormatError(f"line {lineno}: vertex count must be >= 0")
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"line {lineno}: non-integer endpoint in {line!r}") from None
        try:
            SimpleGraph(n, [(u, v)])
        except ValueError as exc:
            raise GraphFormatError(f"line {lineno}: {exc}") from None
        edges.append((u, v))
    if n is None:
        raise GraphFormatError("missing 'n=<count>' header")
    try:
        return SimpleGraph(n, edges)
    except ValueError as exc:
        # Range and loop errors are caught per line above; only duplicates
        # across lines reach this point.
        raise GraphFormatError(str(exc)) from None


def write_graph(graph: SimpleGraph, out: IO[str]) -> None:
    """Write the edge-list format: header then 'u v' lines, u < v, sorted."""
    out.write(f"n={graph.n}\n")
    for u, v in graph.edges:
        out.write(f"{u} {v}\n")


def to_dot(graph: SimpleGraph) -> str:
    """Plain undirected DOT; every vertex declared so isolated ones survive."""
    lines = ["graph G {"]
    for v in range(graph.n):
        lines.append(f"  {v};")
    for u, v in graph.edges:
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
