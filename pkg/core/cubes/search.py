"""Exhaustive searches for squares and cubes in A_n."""

from __future__ import annotations

import logging
from collections import deque
from typing import Iterable, Optional

from core.config import get_exhaustive_rank
from core.cubes.cube import (
    CoxeterCube,
    TerminalEdgeSet,
    canonical_terminal_set,
    cube_flip,
    cube_from_terminal_edges,
)
from core.cubes.squares import CoxeterSquare
from core.exceptions import BoundExceededError
from core.transfer import transfer_image
from core.typea import (
    Permutation,
    RootSet,
    all_permutations,
    check_rank,
    compose,
    inversion_set,
    positive_roots,
    support,
)

logger = logging.getLogger(__name__)


def _check_exhaustive(rank: int) -> None:
    check_rank(rank)
    limit = get_exhaustive_rank()
    if rank > limit:
        raise BoundExceededError(rank, limit, "exhaustive")


def enumerate_squares(rank: int) -> list[CoxeterSquare]:
    """Every Coxeter square of A_rank."""
    _check_exhaustive(rank)
    elements = [x for x in all_permutations(rank) if not x.is_identity()]
    squares = []
    for w in elements:
        for x in elements:
            y = transfer_image(w, x)
            if y is None or y.is_identity():
                continue
            z = compose(y.inverse(), compose(w, x))
            if not z.is_identity():
                squares.append(CoxeterSquare(w, x, y, z))
    logger.debug("A_%s has %s Coxeter squares", rank, len(squares))
    return squares


def _disjoint_families(
    candidates: list[tuple[Permutation, RootSet]],
    size: int,
    cover: Optional[RootSet],
) -> Iterable[list[Permutation]]:
    """Families of ``size`` elements with pairwise disjoint inversion sets.

    With ``cover`` set, the inversion sets must partition it; each step then
    takes an element through the least uncovered root so every family is
    produced once.
    """
    if cover is not None:
        ordered = sorted(cover)

        def extend_cover(chosen: list[Permutation], used: RootSet) -> Iterable[list[Permutation]]:
            if len(chosen) == size:
                if used == cover:
                    yield list(chosen)
                return
            pivot = next((root for root in ordered if root not in used), None)
            if pivot is None:
                return
            for element, roots in candidates:
                if pivot in roots and not roots & used and roots <= cover:
                    chosen.append(element)
                    yield from extend_cover(chosen, used | roots)
                    chosen.pop()

        yield from extend_cover([], frozenset())
        return

    def extend(start: int, chosen: list[Permutation], used: RootSet) -> Iterable[list[Permutation]]:
        if len(chosen) == size:
            yield list(chosen)
            return
        for index in range(start, len(candidates)):
            element, roots = candidates[index]
            if not roots & used:
                chosen.append(element)
                yield from extend(index + 1, chosen, used | roots)
                chosen.pop()

    yield from extend(0, [], frozenset())


def brute_force_cubes(rank: int, dimension: Optional[int] = None) -> list[TerminalEdgeSet]:
    """Canonical terminal sets of every cube of the given dimension in A_rank.

    Candidates are families of non-identity elements with pairwise disjoint
    inversion sets (covering every positive root when the dimension equals
    the rank); each is rebuilt with the closed-form reconstruction and kept
    only if it validates.
    """
    _check_exhaustive(rank)
    dimension = rank if dimension is None else dimension
    candidates = [
        (x, inversion_set(x)) for x in all_permutations(rank) if not x.is_identity()
    ]
    cover = positive_roots(rank) if dimension == rank else None
    classes: set[TerminalEdgeSet] = set()
    families = 0
    for family in _disjoint_families(candidates, dimension, cover):
        families += 1
        if cube_from_terminal_edges(family) is not None:
            classes.add(canonical_terminal_set(family))
    logger.debug(
        "Brute force over A_%s dimension %s: %s families, %s classes",
        rank,
        dimension,
        families,
        len(classes),
    )
    return sorted(classes, key=lambda terminals: tuple(x.sort_key() for x in terminals))


def orbit_edge_elements(cubes: Iterable[CoxeterCube]) -> set[Permutation]:
    """Every element labelling an edge of some flip orientation of the given cubes."""
    elements: set[Permutation] = set()
    for cube in cubes:
        seen = {cube.terminal_edges(): cube}
        queue = deque([cube])
        while queue:
            current = queue.popleft()
            elements.update(current.edges.values())
            for direction in range(1, current.dimension + 1):
                flipped = cube_flip(current, direction)
                key = flipped.terminal_edges()
                if key not in seen:
                    seen[key] = flipped
                    queue.append(flipped)
    return elements


def is_product_square(square: CoxeterSquare, left: Iterable[int], right: Iterable[int]) -> bool:
    """True when the two terminal edges lie in W_left and W_right, one each."""
    left_set, right_set = frozenset(left), frozenset(right)
    first, second = support(square.y), support(square.w)
    return (first <= left_set and second <= right_set) or (
        first <= right_set and second <= left_set
    )
