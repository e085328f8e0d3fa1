"""Shared random generators for the test suite."""

from __future__ import annotations

import random

from unicover import RootedTree, SimpleGraph


def random_tree(rng: random.Random, max_nodes: int = 40) -> RootedTree:
    """Random tree with 1..max_nodes nodes: attach each node to a random earlier one."""
    children: list[list[int]] = [[]]
    for _ in range(rng.randrange(max_nodes)):
        parent = rng.randrange(len(children))
        children.append([])
        children[parent].append(len(children) - 1)

    def build(i: int) -> RootedTree:
        return RootedTree(tuple(build(c) for c in children[i]))

    return build(0)


def shuffle_tree(tree: RootedTree, rng: random.Random) -> RootedTree:
    """Recursively permute every child list."""
    kids = [shuffle_tree(c, rng) for c in tree.children]
    rng.shuffle(kids)
    return RootedTree(tuple(kids))


def random_graph(rng: random.Random, n: int, p: float) -> SimpleGraph:
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return SimpleGraph(n, edges)


def cycle_graph(k: int) -> SimpleGraph:
    return SimpleGraph(k, [(i, (i + 1) % k) for i in range(k)])


def path_graph(k: int) -> SimpleGraph:
    return SimpleGraph(k, [(i, i + 1) for i in range(k - 1)])


def complete_graph(k: int) -> SimpleGraph:
    return SimpleGraph(k, [(i, j) for i in range(k) for j in range(i + 1, k)])


def petersen_graph() -> SimpleGraph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return SimpleGraph(10, outer + spokes + inner)


def regular_tree_ball_code(d: int, radius: int) -> str:
    """Canonical code of the radius ball in the infinite d-regular tree."""

    def branch(k: int) -> str:
        if k == 0:
            return "()"
        return "(" + branch(k - 1) * (d - 1) + ")"

    if radius == 0:
        return "()"
    return "(" + branch(radius - 1) * d + ")"
