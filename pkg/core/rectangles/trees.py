"""Binary trees and their bijection with based rectangle partitions.

The top rectangle of the triangle over the generator interval [a, c] is based
at some b; the tree gets a node whose left subtree comes from [a, b-1] and
whose right subtree comes from [b+1, c]. An empty interval is a leaf.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Union

from core.exceptions import InvalidCubeError, ParseError
from core.rectangles.partitions import BasedRectangle, RectanglePartition
from core.typea import PositiveRoot, check_rank


@dataclass(frozen=True)
class Leaf:
    @property
    def leaves(self) -> int:
        return 1

    def serialize(self) -> int:
        return 0

    def __str__(self) -> str:
        return "Leaf"


@dataclass(frozen=True)
class Node:
    left: "BinaryTree"
    right: "BinaryTree"
    leaves: int = field(init=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "leaves", self.left.leaves + self.right.leaves)

    def serialize(self) -> list:
        return [self.left.serialize(), self.right.serialize()]

    def __str__(self) -> str:
        return f"Node({self.left}, {self.right})"


BinaryTree = Union[Leaf, Node]

LEAF = Leaf()


def from_nested(value: object) -> BinaryTree:
    """Build a tree from nested two-element arrays with 0 for a leaf."""
    if value == 0 and not isinstance(value, bool):
        return LEAF
    if isinstance(value, (list, tuple)) and len(value) == 2:
        return Node(from_nested(value[0]), from_nested(value[1]))
    raise ParseError(f"Cannot read a binary tree from {value!r}")


def serialized_text(tree: BinaryTree) -> str:
    return json.dumps(tree.serialize(), separators=(",", ":"))


def _tree_key(tree: BinaryTree) -> tuple[int, str]:
    return (tree.leaves, serialized_text(tree))


def partition_to_tree(partition: RectanglePartition) -> BinaryTree:
    partition.validate()

    def build(a: int, c: int) -> BinaryTree:
        if a > c:
            return LEAF
        top = partition.rectangle_containing(PositiveRoot(a, c + 1))
        if top is None or top.lo != a or top.hi != c + 1:
            raise InvalidCubeError(f"Triangle [{a},{c}] is not a union of rectangles")
        return Node(build(a, top.base - 1), build(top.base + 1, c))

    return build(1, partition.rank)


def tree_to_partition(rank: int, tree: BinaryTree) -> RectanglePartition:
    check_rank(rank)
    if tree.leaves != rank + 1:
        raise InvalidCubeError(f"A tree for A_{rank} needs {rank + 1} leaves, got {tree.leaves}")
    rectangles: list[BasedRectangle] = []

    def place(node: BinaryTree, a: int, c: int) -> None:
        if isinstance(node, Leaf):
            return
        base = a + node.left.leaves - 1
        rectangles.append(BasedRectangle(a, base, c + 1))
        place(node.left, a, base - 1)
        place(node.right, base + 1, c)

    place(tree, 1, rank)
    return RectanglePartition(rank, frozenset(rectangles))


def tree_canonical(tree: BinaryTree) -> BinaryTree:
    """Representative of the mirror-isomorphism class: larger child on the left."""
    if isinstance(tree, Leaf):
        return tree
    left, right = tree_canonical(tree.left), tree_canonical(tree.right)
    if _tree_key(left) < _tree_key(right):
        left, right = right, left
    return Node(left, right)


def mirror(tree: BinaryTree) -> BinaryTree:
    if isinstance(tree, Leaf):
        return tree
    return Node(mirror(tree.right), mirror(tree.left))


def tree_flip(tree: BinaryTree, path: str = "") -> BinaryTree:
    """Replace the subtree reached by ``path`` (steps L/R) with its mirror image."""
    if not path:
        return mirror(tree)
    if isinstance(tree, Leaf):
        raise InvalidCubeError(f"Path {path!r} runs past a leaf")
    step, rest = path[0].upper(), path[1:]
    if step == "L":
        return Node(tree_flip(tree.left, rest), tree.right)
    if step == "R":
        return Node(tree.left, tree_flip(tree.right, rest))
    raise InvalidCubeError(f"Path steps must be L or R, got {step!r}")


def internal_paths(tree: BinaryTree, prefix: str = "") -> list[str]:
    if isinstance(tree, Leaf):
        return []
    return (
        [prefix]
        + internal_paths(tree.left, prefix + "L")
        + internal_paths(tree.right, prefix + "R")
    )


@lru_cache(maxsize=None)
def enumerate_trees(leaves: int) -> tuple[BinaryTree, ...]:
    """Every ordered binary tree with the given number of leaves."""
    if leaves < 1:
        raise ValueError("A binary tree has at least one leaf")
    if leaves == 1:
        return (LEAF,)
    trees = []
    for left_leaves in range(1, leaves):
        for left in enumerate_trees(left_leaves):
            for right in enumerate_trees(leaves - left_leaves):
                trees.append(Node(left, right))
    return tuple(trees)


@lru_cache(maxsize=None)
def catalan(n: int) -> int:
    if n == 0:
        return 1
    return sum(catalan(i) * catalan(n - 1 - i) for i in range(n))


@lru_cache(maxsize=None)
def wedderburn_etherington(leaves: int) -> int:
    """Binary trees with the given number of leaves up to swapping children."""
    if leaves <= 1:
        return 1 if leaves == 1 else 0
    half = leaves // 2
    total = sum(
        wedderburn_etherington(i) * wedderburn_etherington(leaves - i)
        for i in range(1, (leaves + 1) // 2)
    )
    if leaves % 2 == 0:
        middle = wedderburn_etherington(half)
        total += middle * (middle + 1) // 2
    return total
