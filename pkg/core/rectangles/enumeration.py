"""Enumeration of partitions, cube classes and edge elements in A_n."""

from __future__ import annotations

import logging
from typing import NamedTuple, Optional

from core.config import get_enumeration_bound, get_exhaustive_rank
from core.cubes import (
    CoxeterCube,
    TerminalEdgeSet,
    canonical_terminal_set,
    orbit_edge_elements,
)
from core.exceptions import BoundExceededError, CoxeterError
from core.rectangles.partitions import (
    RectanglePartition,
    all_rectangles,
    cube_of_partition,
    element_of_rectangle,
    terminal_edges_of_partition,
)
from core.rectangles.trees import (
    BinaryTree,
    enumerate_trees,
    serialized_text,
    tree_canonical,
    tree_to_partition,
)
from core.typea import Permutation, all_permutations, check_rank, is_bigrassmannian

logger = logging.getLogger(__name__)


class CubeClasses(NamedTuple):
    count: int
    representatives: list[CoxeterCube]
    trees: list[BinaryTree]
    flip_orbit_count: Optional[int]


def _check_bound(rank: int, bound: Optional[int] = None) -> None:
    check_rank(rank)
    if bound is None:
        bound = get_enumeration_bound()
    if rank > bound:
        raise BoundExceededError(rank, bound)


def enumerate_partitions(rank: int, bound: Optional[int] = None) -> list[RectanglePartition]:
    """Every based rectangle partition of A_rank, one per ordered tree.

    ``bound`` overrides the configured enumeration bound.
    """
    _check_bound(rank, bound)
    partitions = [tree_to_partition(rank, tree) for tree in enumerate_trees(rank + 1)]
    logger.debug("A_%s has %s rectangle partitions", rank, len(partitions))
    return partitions


def enumerate_cube_classes(
    rank: int, cross_check: Optional[bool] = None, bound: Optional[int] = None
) -> CubeClasses:
    """Cube classes modulo reorientation, indexed by unordered trees.

    When ``cross_check`` is on (default: rank within the exhaustive bound) the
    partition cubes are also deduplicated by their flip orbits and the two
    counts must agree.
    """
    _check_bound(rank, bound)
    if cross_check is None:
        cross_check = rank <= get_exhaustive_rank()

    classes: dict[str, BinaryTree] = {}
    for tree in enumerate_trees(rank + 1):
        canonical = tree_canonical(tree)
        classes.setdefault(serialized_text(canonical), canonical)
    trees = [classes[key] for key in sorted(classes)]
    representatives = [cube_of_partition(tree_to_partition(rank, tree)) for tree in trees]

    flip_orbit_count: Optional[int] = None
    if cross_check:
        orbits: set[TerminalEdgeSet] = {
            canonical_terminal_set(terminal_edges_of_partition(partition))
            for partition in enumerate_partitions(rank, bound)
        }
        flip_orbit_count = len(orbits)
        if flip_orbit_count != len(trees):
            raise CoxeterError(
                f"A_{rank}: {len(trees)} tree classes but {flip_orbit_count} flip orbits"
            )
    logger.debug("A_%s has %s cube classes", rank, len(trees))
    return CubeClasses(len(trees), representatives, trees, flip_orbit_count)


def edge_set(rank: int, bound: Optional[int] = None) -> set[Permutation]:
    """Elements labelling an edge of some orientation of a cube in A_rank."""
    _check_bound(rank, bound)
    return {element_of_rectangle(rank, rectangle) for rectangle in all_rectangles(rank)}


def edge_set_from_orbits(rank: int, bound: Optional[int] = None) -> set[Permutation]:
    """Edge labels of every flip orientation of the class representatives."""
    classes = enumerate_cube_classes(rank, cross_check=False, bound=bound)
    return orbit_edge_elements(classes.representatives)


def bigrassmannian_scan(rank: int) -> set[Permutation]:
    check_rank(rank)
    limit = get_exhaustive_rank()
    if rank > limit:
        raise BoundExceededError(rank, limit, "exhaustive")
    return {x for x in all_permutations(rank) if is_bigrassmannian(x)}


def sorted_elements(elements: set[Permutation]) -> list[Permutation]:
    return sorted(elements, key=Permutation.sort_key)
