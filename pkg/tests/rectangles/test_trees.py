"""Tests for binary trees and the partition bijection."""

from __future__ import annotations

import pytest

from core.cubes import cube_flip
from core.exceptions import InvalidCubeError, ParseError
from core.rectangles import (
    LEAF,
    Node,
    RectanglePartition,
    SubtriangleInterval,
    catalan,
    compatible_subtriangles,
    cube_of_partition,
    enumerate_partitions,
    enumerate_trees,
    flip_subtriangle,
    from_nested,
    highest_rectangle_of,
    internal_paths,
    mirror,
    partition_to_tree,
    serialized_text,
    tree_canonical,
    tree_flip,
    tree_to_partition,
    wedderburn_etherington,
)

A4_TREE = Node(Node(LEAF, Node(Node(LEAF, LEAF), LEAF)), LEAF)


def test_partition_to_tree(a4_partition: RectanglePartition) -> None:
    assert partition_to_tree(a4_partition) == A4_TREE


def test_tree_to_partition(a4_partition: RectanglePartition) -> None:
    assert tree_to_partition(4, A4_TREE) == a4_partition


def test_leaf_count_must_match_rank() -> None:
    with pytest.raises(InvalidCubeError):
        tree_to_partition(3, A4_TREE)


@pytest.mark.parametrize("rank", range(1, 9))
def test_bijection(rank: int) -> None:
    trees = enumerate_trees(rank + 1)
    assert len(trees) == catalan(rank)
    partitions = {tree_to_partition(rank, tree) for tree in trees}
    assert len(partitions) == len(trees)
    for tree in trees:
        partition = tree_to_partition(rank, tree).validate()
        assert partition_to_tree(partition) == tree


@pytest.mark.parametrize("rank", range(1, 7))
def test_every_partition_has_rank_many_compatible_subtriangles(rank: int) -> None:
    for partition in enumerate_partitions(rank):
        assert len(compatible_subtriangles(partition)) == rank


@pytest.mark.parametrize("rank", range(1, 6))
def test_subtriangle_flips_are_cube_flips(rank: int) -> None:
    for partition in enumerate_partitions(rank):
        cube = cube_of_partition(partition)
        for interval in compatible_subtriangles(partition):
            direction = highest_rectangle_of(partition, interval).base
            flipped = cube_of_partition(flip_subtriangle(partition, interval))
            assert set(flipped.terminal_edges()) == set(
                cube_flip(cube, direction).terminal_edges()
            )


def test_subtriangle_flip_is_tree_flip(a4_partition: RectanglePartition) -> None:
    flipped = flip_subtriangle(a4_partition, SubtriangleInterval(1, 3))
    assert partition_to_tree(flipped) == tree_flip(A4_TREE, "L")
    assert partition_to_tree(flipped) == Node(Node(Node(LEAF, Node(LEAF, LEAF)), LEAF), LEAF)


def test_canonical_form() -> None:
    assert tree_canonical(A4_TREE) == from_nested([[[[0, 0], 0], 0], 0])
    assert tree_canonical(mirror(A4_TREE)) == tree_canonical(A4_TREE)
    assert tree_canonical(LEAF) == LEAF


def test_canonical_classes_are_wedderburn_etherington() -> None:
    expected = [1, 1, 2, 3, 6]
    for rank, count in enumerate(expected, start=1):
        classes = {serialized_text(tree_canonical(t)) for t in enumerate_trees(rank + 1)}
        assert len(classes) == count == wedderburn_etherington(rank + 1)


def test_sequences() -> None:
    assert [catalan(n) for n in range(7)] == [1, 1, 2, 5, 14, 42, 132]
    assert [wedderburn_etherington(n) for n in range(1, 9)] == [1, 1, 1, 2, 3, 6, 11, 23]


def test_serialization() -> None:
    assert serialized_text(A4_TREE) == "[[0,[[0,0],0]],0]"
    assert from_nested(A4_TREE.serialize()) == A4_TREE
    assert A4_TREE.leaves == 5


@pytest.mark.parametrize("value", [[0], 1, "x", False, [0, 0, 0]])
def test_from_nested_rejects(value: object) -> None:
    with pytest.raises(ParseError):
        from_nested(value)


def test_flip_paths() -> None:
    assert internal_paths(A4_TREE) == ["", "L", "LR", "LRL"]
    assert tree_flip(A4_TREE) == mirror(A4_TREE)
    with pytest.raises(InvalidCubeError):
        tree_flip(A4_TREE, "RL")
    with pytest.raises(InvalidCubeError):
        tree_flip(A4_TREE, "X")


def test_enumerate_trees_rejects_empty() -> None:
    with pytest.raises(ValueError):
        enumerate_trees(0)
