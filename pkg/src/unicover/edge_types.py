"""Types of root-incident edges and the typed degree table.

Cutting a root edge of a depth-bounded tree leaves two pieces.  The edge's
type records both, as canonical codes: the subtree hanging below the edge,
kept at its natural depth, and the component containing the root, truncated
one level shallower than the tree bound.  The pair is directional; swapping
the two codes gives the type the same edge would have when seen from its far
endpoint.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from .errors import DepthError
from .trees import CanonCode, RootedTree, canonical_code, code_sort_key, truncate
from .trees import depth as tree_depth

__all__ = [
    "TypeClass",
    "EdgeType",
    "TypedDegreeTable",
    "edge_type",
    "build_table",
]


class TypeClass(str, Enum):
    """Partition of edge types: diagonal, or one half of an inverse pair."""

    DIAGONAL = "diag"
    A = "A"
    B = "B"


@dataclass(frozen=True)
class EdgeType:
    """Isomorphism type of a root-incident edge.

    `near` is the canonical code of the component containing the root after
    the edge is deleted, truncated one level below the tree bound; `far` is
    the code of the full subtree hanging below the edge.
    """

    near: CanonCode
    far: CanonCode

    @property
    def klass(self) -> TypeClass:
        if self.near == self.far:
            return TypeClass.DIAGONAL
        if code_sort_key(self.near) < code_sort_key(self.far):
            return TypeClass.A
        return TypeClass.B

    def inverse(self) -> "EdgeType":
        """The same edge as seen from its far endpoint."""
        return EdgeType(near=self.far, far=self.near)

    def sort_key(self) -> tuple[tuple[int, str], tuple[int, str]]:
        return (code_sort_key(self.near), code_sort_key(self.far))


def edge_type(tree: RootedTree, child_index: int, depth: int) -> EdgeType:
    """Type of the root edge leading into ``tree.children[child_index]``.

    The far side is the child's subtree untouched; the near side is the rest
    of the tree truncated to `depth` - 1.  Only the near side is truncated:
    the far side already lives one level below the root.
    """
    if depth < 1:
        raise ValueError("depth must be >= 1")
    if tree_depth(tree) > depth:
        raise DepthError(f"tree has depth {tree_depth(tree)} > {depth}")
    children = tree.children
    if not 0 <= child_index < len(children):
        raise IndexError(f"child index {child_index} out of range for root degree {len(children)}")
    far = canonical_code(children[child_index])
    rest = RootedTree(children[:child_index] + children[child_index + 1 :])
    near = canonical_code(truncate(rest, depth - 1))
    return EdgeType(near=near, far=far)


@dataclass(frozen=True, eq=False)
class TypedDegreeTable:
    """Per-vertex, per-type counts of root-incident edges.

    `degrees` maps each occurring type to its length-`n` count vector;
    `totals` holds the vector sums; `degree_seq` is the plain root-degree
    sequence (the row sums over types).
    """

    n: int
    depth: int
    degrees: dict[EdgeType, tuple[int, ...]]
    totals: dict[EdgeType, int]
    degree_seq: tuple[int, ...]

    def occurring_types(self) -> list[EdgeType]:
        """All types with at least one edge, in deterministic order."""
        return sorted(self.degrees, key=EdgeType.sort_key)

    def degree_vector(self, etype: EdgeType) -> tuple[int, ...]:
        """Count vector for `etype`; all zeros if the type never occurs."""
        return self.degrees.get(etype, (0,) * self.n)

    def to_json_dict(self) -> dict:
        return {
            "h": self.depth,
            "n": self.n,
            "types": [
                {
                    "r": etype.near,
                    "s": etype.far,
                    "class": etype.klass.value,
                    "N": self.totals[etype],
                    "degrees": list(self.degrees[etype]),
                }
                for etype in self.occurring_types()
            ],
        }


def build_table(trees: Sequence[RootedTree], depth: int) -> TypedDegreeTable:
    """Count the root-incident edges of every type across the collection.

    Raises DepthError (listing the offending indices) if any tree is deeper
    than `depth`; requires `depth` >= 1.
    """
    if depth < 1:
        raise ValueError("depth must be >= 1")
    too_deep = tuple(i for i, t in enumerate(trees) if tree_depth(t) > depth)
    if too_deep:
        raise DepthError(
            f"trees deeper than {depth} at indices {list(too_deep)}", indices=too_deep
        )
    n = len(trees)
    counts: dict[EdgeType, list[int]] = {}
    for i, tree in enumerate(trees):
        for j in range(len(tree.children)):
            etype = edge_type(tree, j, depth)
            vec = counts.setdefault(etype, [0] * n)
            vec[i] += 1
    ordered = sorted(counts, key=EdgeType.sort_key)
    degrees = {etype: tuple(counts[etype]) for etype in ordered}
    totals = {etype: sum(vec) for etype, vec in degrees.items()}
    degree_seq = tuple(len(t.children) for t in trees)
    return TypedDegreeTable(
        n=n, depth=depth, degrees=degrees, totals=totals, degree_seq=degree_seq
    )
