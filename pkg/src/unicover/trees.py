"""Unlabeled rooted trees: parsing, canonical codes, and basic surgery.

A tree is written as one balanced-parentheses word: the outermost pair is the
root and each nested pair is a child subtree.  The canonical code of a tree
is the unique such word in which every node's child codes appear in ascending
:func:`code_sort_key` order, so two trees are isomorphic as rooted trees
exactly when their canonical codes are equal as strings.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import IO, Iterable, Iterator

from .errors import ParseError

__all__ = [
    "RootedTree",
    "CanonCode",
    "code_sort_key",
    "parse_tree",
    "canonical_code",
    "canonicalize",
    "serialize",
    "depth",
    "truncate",
    "count_nodes",
    "iter_collection",
    "read_collection",
    "write_collection",
]

# Canonical codes are plain strings over "(" and ")".
CanonCode = str


@dataclass(frozen=True)
class RootedTree:
    """Unlabeled rooted tree; the storage order of `children` carries no meaning.

    Equality and hashing are structural (order-sensitive); use canonical
    codes to compare trees up to isomorphism.
    """

    children: tuple["RootedTree", ...] = ()


def code_sort_key(code: CanonCode) -> tuple[int, str]:
    """Total order on codes: shorter first, ties by the raw string."""
    return (len(code), code)


def parse_tree(text: str) -> RootedTree:
    """Parse one balanced-parentheses word (surrounding whitespace ignored).

    Raises ParseError on empty input, unbalanced parentheses, characters
    other than parentheses, or trailing garbage after the word.
    """
    word = text.strip()
    if not word:
        raise ParseError("empty tree text")
    stack: list[list[RootedTree]] = []
    root: RootedTree | None = None
    for pos, ch in enumerate(word):
        if root is not None:
            raise ParseError(f"trailing characters after the tree at position {pos}")
        if ch == "(":
            stack.append([])
        elif ch == ")":
            if not stack:
                raise ParseError(f"unbalanced ')' at position {pos}")
            node = RootedTree(tuple(stack.pop()))
            if stack:
                stack[-1].append(node)
            else:
                root = node
        else:
            raise ParseError(f"unexpected character {ch!r} at position {pos}")
    if root is None:
        raise ParseError("unbalanced '(': tree text ends too early")
    return root


def canonical_code(tree: RootedTree) -> CanonCode:
    """Canonical code; equal codes == isomorphic rooted trees.

    A leaf codes to "()"; an internal node codes to "(" plus its children's
    codes sorted ascending by :func:`code_sort_key` plus ")".
    """
    # Explicit post-order stack so very deep trees cannot hit the
    # interpreter recursion limit.
    codes: dict[int, str] = {}
    stack: list[tuple[RootedTree, bool]] = [(tree, False)]
    while stack:
        node, expanded = stack.pop()
        if expanded:
            parts = sorted((codes[id(c)] for c in node.children), key=code_sort_key)
            codes[id(node)] = "(" + "".join(parts) + ")"
        else:
            stack.append((node, True))
            for child in node.children:
                stack.append((child, False))
    return codes[id(tree)]


def canonicalize(tree: RootedTree) -> RootedTree:
    """Isomorphic copy whose children are stored in canonical order."""
    return parse_tree(canonical_code(tree))


def serialize(tree: RootedTree) -> str:
    """Serialize to text.  Always emits the canonical code."""
    return canonical_code(tree)


def depth(tree: RootedTree) -> int:
    """Depth of the tree: 0 for a lone root."""
    best = 0
    stack: list[tuple[RootedTree, int]] = [(tree, 0)]
    while stack:
        node, d = stack.pop()
        if d > best:
            best = d
        for child in node.children:
            stack.append((child, d + 1))
    return best


def truncate(tree: RootedTree, k: int) -> RootedTree:
    """Subtree of all nodes at depth <= k (identity when depth(tree) <= k)."""
    if k < 0:
        raise ValueError("truncation depth must be >= 0")
    if k == 0 or not tree.children:
        return RootedTree()
    return RootedTree(tuple(truncate(child, k - 1) for child in tree.children))


def count_nodes(tree: RootedTree) -> int:
    """Number of nodes, root included."""
    total = 0
    stack = [tree]
    while stack:
        node = stack.pop()
        total += 1
        stack.extend(node.children)
    return total


def iter_collection(lines: Iterable[str]) -> Iterator[tuple[int, RootedTree]]:
    """Yield (line number, tree) for each tree line of a collection file.

    Blank lines and lines starting with '#' are skipped.  Line numbers are
    1-based and refer to the raw input.
    """
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            yield lineno, parse_tree(line)
        except ParseError as exc:
            raise ParseError(f"line {lineno}: {exc}") from None


def read_collection(lines: Iterable[str]) -> list[RootedTree]:
    """Read a tree collection, one balanced-parentheses word per line."""
    return [tree for _, tree in iter_collection(lines)]


def write_collection(trees: Iterable[RootedTree], out: IO[str]) -> None:
    """Write one canonical code per line, in input order."""
    for tree in trees:
        out.write(serialize(tree) + "\n")
