"""Based rectangles and their partitions of the A_n root poset.

A based rectangle ``(lo, base, hi)`` is the grid of roots ``(p, q)`` with
``lo <= p <= base < q <= hi``; it holds exactly one simple root, ``alpha_base``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable, Optional

from core.cubes import CoxeterCube, cube_from_terminal_edges
from core.exceptions import InvalidCubeError, InvalidInversionSetError
from core.typea import (
    Permutation,
    PositiveRoot,
    RootSet,
    check_rank,
    inversion_set,
    parabolic_positive_roots,
    permutation_from_inversion_set,
    positive_roots,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class BasedRectangle:
    lo: int
    base: int
    hi: int

    def __post_init__(self) -> None:
        if not 1 <= self.lo <= self.base < self.hi:
            raise InvalidCubeError(f"({self.lo},{self.base},{self.hi}) is not a based rectangle")

    def roots(self) -> RootSet:
        return frozenset(
            PositiveRoot(p, q)
            for p in range(self.lo, self.base + 1)
            for q in range(self.base + 1, self.hi + 1)
        )

    @property
    def size(self) -> int:
        return (self.base - self.lo + 1) * (self.hi - self.base)

    def contains(self, root: PositiveRoot) -> bool:
        return self.lo <= root.lo <= self.base < root.hi <= self.hi

    def is_highest(self, rank: int) -> bool:
        return self.lo == 1 and self.hi == rank + 1

    def as_list(self) -> list[int]:
        return [self.lo, self.base, self.hi]

    def __str__(self) -> str:
        return f"({self.lo},{self.base},{self.hi})"


@dataclass(frozen=True, order=True)
class SubtriangleInterval:
    """The generator interval {s_a, ..., s_c}."""

    a: int
    c: int

    def __post_init__(self) -> None:
        if not 1 <= self.a <= self.c:
            raise InvalidCubeError(f"[{self.a},{self.c}] is not a generator interval")

    def roots(self, rank: int) -> RootSet:
        return parabolic_positive_roots(rank, range(self.a, self.c + 1))

    def mirror(self, i: int) -> int:
        return self.a + self.c + 1 - i

    def __str__(self) -> str:
        return f"[{self.a},{self.c}]"


@dataclass(frozen=True)
class RectanglePartition:
    rank: int
    rectangles: frozenset[BasedRectangle]

    def __post_init__(self) -> None:
        check_rank(self.rank)
        object.__setattr__(self, "rectangles", frozenset(self.rectangles))

    def sorted_rectangles(self) -> list[BasedRectangle]:
        return sorted(self.rectangles)

    def rectangle_containing(self, root: PositiveRoot) -> Optional[BasedRectangle]:
        return next((r for r in self.rectangles if r.contains(root)), None)

    def is_valid(self) -> bool:
        if len(self.rectangles) != self.rank:
            return False
        covered: set[PositiveRoot] = set()
        for rectangle in self.rectangles:
            if rectangle.hi > self.rank + 1:
                return False
            roots = rectangle.roots()
            if covered & roots:
                return False
            covered |= roots
        return covered == positive_roots(self.rank)

    def validate(self) -> "RectanglePartition":
        if not self.is_valid():
            raise InvalidCubeError(
                f"{[str(r) for r in self.sorted_rectangles()]} does not partition "
                f"the positive roots of A_{self.rank}"
            )
        return self


def rectangle_roots(rectangle: BasedRectangle) -> RootSet:
    return rectangle.roots()


def all_rectangles(rank: int) -> list[BasedRectangle]:
    check_rank(rank)
    return [
        BasedRectangle(lo, base, hi)
        for lo in range(1, rank + 1)
        for base in range(lo, rank + 1)
        for hi in range(base + 1, rank + 2)
    ]


def element_of_rectangle(rank: int, rectangle: BasedRectangle) -> Permutation:
    """The element whose left inversion set is the rectangle."""
    if rectangle.hi > rank + 1:
        raise InvalidCubeError(f"Rectangle {rectangle} does not fit in A_{rank}")
    try:
        return permutation_from_inversion_set(rank, rectangle.roots())
    except InvalidInversionSetError as exc:
        raise InvalidCubeError(f"Rectangle {rectangle} is not an inversion set") from exc


def rectangle_of_element(x: Permutation) -> Optional[BasedRectangle]:
    """The rectangle equal to Phi_x, if Phi_x is one."""
    roots = inversion_set(x)
    if not roots:
        return None
    lo = min(root.lo for root in roots)
    base = max(root.lo for root in roots)
    hi = max(root.hi for root in roots)
    if base >= min(root.hi for root in roots):
        return None
    rectangle = BasedRectangle(lo, base, hi)
    return rectangle if rectangle.roots() == roots else None


def partition_of_cube(cube: CoxeterCube) -> RectanglePartition:
    """Rectangles of the terminal edges of an n-cube in A_n."""
    if cube.dimension != cube.rank:
        raise InvalidCubeError(
            f"A {cube.dimension}-cube in A_{cube.rank} does not partition the root poset"
        )
    rectangles = []
    for element in cube.terminal_edges():
        rectangle = rectangle_of_element(element)
        if rectangle is None:
            raise InvalidCubeError(f"Terminal edge {element} is not a based rectangle")
        rectangles.append(rectangle)
    return RectanglePartition(cube.rank, frozenset(rectangles)).validate()


def terminal_edges_of_partition(partition: RectanglePartition) -> list[Permutation]:
    """Rectangle elements ordered by base, so direction k carries alpha_k."""
    partition.validate()
    ordered = sorted(partition.rectangles, key=lambda r: r.base)
    return [element_of_rectangle(partition.rank, r) for r in ordered]


def cube_of_partition(partition: RectanglePartition) -> CoxeterCube:
    cube = cube_from_terminal_edges(terminal_edges_of_partition(partition))
    if cube is None:
        raise InvalidCubeError(
            f"Partition {[str(r) for r in partition.sorted_rectangles()]} gave an invalid cube"
        )
    return cube


def is_compatible(partition: RectanglePartition, interval: SubtriangleInterval) -> bool:
    """Every rectangle lies inside the triangle of the interval or misses it."""
    triangle = interval.roots(partition.rank)
    for rectangle in partition.rectangles:
        roots = rectangle.roots()
        if roots & triangle and not roots <= triangle:
            return False
    return True


def compatible_subtriangles(partition: RectanglePartition) -> list[SubtriangleInterval]:
    partition.validate()
    n = partition.rank
    found = [
        SubtriangleInterval(a, c)
        for a in range(1, n + 1)
        for c in range(a, n + 1)
        if is_compatible(partition, SubtriangleInterval(a, c))
    ]
    if len(found) != n:
        logger.warning(
            "Partition %s has %s compatible subtriangles, expected %s",
            [str(r) for r in partition.sorted_rectangles()],
            len(found),
            n,
        )
    return found


def highest_rectangle_of(
    partition: RectanglePartition, interval: SubtriangleInterval
) -> BasedRectangle:
    """The rectangle holding the top root (a, c+1) of the interval's triangle."""
    rectangle = partition.rectangle_containing(PositiveRoot(interval.a, interval.c + 1))
    if rectangle is None:
        raise InvalidCubeError(f"No rectangle covers the top of {interval}")
    return rectangle


def flip_subtriangle(
    partition: RectanglePartition, interval: SubtriangleInterval
) -> RectanglePartition:
    """Mirror every rectangle inside the compatible triangle of ``interval``."""
    partition.validate()
    if interval.c > partition.rank or not is_compatible(partition, interval):
        raise InvalidCubeError(f"{interval} is not a compatible subtriangle")
    triangle = interval.roots(partition.rank)
    flipped = []
    for rectangle in partition.rectangles:
        if rectangle.roots() <= triangle:
            rectangle = BasedRectangle(
                interval.mirror(rectangle.hi),
                interval.mirror(rectangle.base + 1),
                interval.mirror(rectangle.lo),
            )
        flipped.append(rectangle)
    return RectanglePartition(partition.rank, frozenset(flipped)).validate()


def partition_from_triples(rank: int, triples: Iterable[Iterable[int]]) -> RectanglePartition:
    rectangles = frozenset(BasedRectangle(*tuple(t)) for t in triples)
    return RectanglePartition(rank, rectangles).validate()
