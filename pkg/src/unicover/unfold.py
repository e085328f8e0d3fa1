"""Cover balls: depth-limited trees of non-backtracking walks.

The universal cover of a graph is the (usually infinite) tree whose vertices
are the non-backtracking walks out of a base vertex; it is never built
explicitly.  A ball of radius r around a vertex is materialized directly by
expanding walks one step at a time and refusing to reverse the edge just
used, which on a simple graph is the same as refusing to return to the
previous vertex.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graphs import SimpleGraph
from .trees import CanonCode, RootedTree, canonical_code, code_sort_key, parse_tree

__all__ = [
    "CoverBall",
    "cover_ball",
    "cover_balls",
    "neighborhood_collection",
    "verify_realization",
    "first_mismatch",
]


@dataclass(frozen=True)
class CoverBall:
    """A cover ball together with the vertex it was unrolled from."""

    tree: RootedTree
    base_vertex: int


def _ball_code(
    graph: SimpleGraph,
    start: int,
    radius: int,
    memo: dict[tuple[int, int, int], CanonCode],
) -> CanonCode:
    """Canonical code of the radius-`radius` ball around `start`.

    The expansion of a walk depends only on (current vertex, previous
    vertex, remaining depth), so `memo` may be shared across calls on the
    same graph.
    """
    adj = graph.adj

    def walk(v: int, prev: int, k: int) -> CanonCode:
        if k == 0:
            return "()"
        key = (v, prev, k)
        code = memo.get(key)
        if code is None:
            parts = sorted((walk(w, v, k - 1) for w in adj[v] if w != prev), key=code_sort_key)
            code = "(" + "".join(parts) + ")"
            memo[key] = code
        return code

    return walk(start, -1, radius)


def cover_ball(graph: SimpleGraph, vertex: int, radius: int) -> RootedTree:
    """Ball of the given radius around `vertex` in the universal cover.

    Its nodes are the non-backtracking walks of length <= radius out of
    `vertex` (walks may revisit vertices but never immediately reverse an
    edge).  The result is in canonical child order.
    """
    if not 0 <= vertex < graph.n:
        raise IndexError(f"vertex {vertex} out of range for n={graph.n}")
    if radius < 0:
        raise ValueError("radius must be >= 0")
    return parse_tree(_ball_code(graph, vertex, radius, {}))


def neighborhood_collection(graph: SimpleGraph, radius: int) -> list[RootedTree]:
    """Cover ball of every vertex, in vertex order, each canonical."""
    if radius < 0:
        raise ValueError("radius must be >= 0")
    memo: dict[tuple[int, int, int], CanonCode] = {}
    return [parse_tree(_ball_code(graph, v, radius, memo)) for v in range(graph.n)]


def cover_balls(graph: SimpleGraph, radius: int) -> list[CoverBall]:
    """Like :func:`neighborhood_collection`, with the base vertex attached."""
    return [CoverBall(t, v) for v, t in enumerate(neighborhood_collection(graph, radius))]


def first_mismatch(graph: SimpleGraph, trees: Sequence[RootedTree], radius: int) -> int | None:
    """Lowest vertex whose cover ball differs from its tree, or None."""
    if len(trees) != graph.n:
        raise ValueError(f"{len(trees)} trees for a graph on {graph.n} vertices")
    if radius < 0:
        raise ValueError("radius must be >= 0")
    memo: dict[tuple[int, int, int], CanonCode] = {}
    for v, tree in enumerate(trees):
        if _ball_code(graph, v, radius, memo) != canonical_code(tree):
            return v
    return None


def verify_realization(graph: SimpleGraph, trees: Sequence[RootedTree], radius: int) -> bool:
    """True iff vertex i's cover ball is isomorphic to trees[i] for every i."""
    return first_mismatch(graph, trees, radius) is None
