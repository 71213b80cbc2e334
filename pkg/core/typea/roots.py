"""Positive roots of A_n and left inversion sets.

The root ``(i, j)`` with ``i < j`` stands for ``alpha_i + ... + alpha_{j-1}``.
An element acts by ``w(i, j) = (w(i), w(j))``, negative when the pair reverses.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional, Sequence

from core.exceptions import (
    InvalidElementError,
    InvalidInversionSetError,
    NonReducedWordError,
)
from core.typea.permutations import (
    Permutation,
    check_generator,
    check_rank,
    generator_set,
    simple_reflection,
    compose,
    identity,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class PositiveRoot:
    lo: int
    hi: int

    def __post_init__(self) -> None:
        integers = isinstance(self.lo, int) and isinstance(self.hi, int)
        if not integers or not 1 <= self.lo < self.hi:
            raise InvalidElementError(f"({self.lo},{self.hi}) is not a positive root")

    @property
    def depth(self) -> int:
        return self.hi - self.lo

    @property
    def is_simple(self) -> bool:
        return self.depth == 1

    @property
    def support(self) -> frozenset[int]:
        return frozenset(range(self.lo, self.hi))

    def coefficients(self, rank: int) -> tuple[int, ...]:
        """Coefficients over the simple roots alpha_1..alpha_rank."""
        return tuple(1 if self.lo <= k < self.hi else 0 for k in range(1, rank + 1))

    def check_rank(self, rank: int) -> "PositiveRoot":
        if self.hi > rank + 1:
            raise InvalidElementError(f"Root {self} does not belong to A_{rank}")
        return self

    def __str__(self) -> str:
        return f"({self.lo},{self.hi})"


@dataclass(frozen=True)
class SignedRoot:
    root: PositiveRoot
    positive: bool = True

    def __neg__(self) -> "SignedRoot":
        return SignedRoot(self.root, not self.positive)

    def __str__(self) -> str:
        return ("+" if self.positive else "-") + str(self.root)


RootSet = frozenset[PositiveRoot]


class RootData(NamedTuple):
    support: frozenset[int]
    depth: int


def simple_root(index: int) -> PositiveRoot:
    return PositiveRoot(index, index + 1)


def simple_roots(rank: int) -> list[PositiveRoot]:
    check_rank(rank)
    return [simple_root(i) for i in range(1, rank + 1)]


def positive_roots(rank: int) -> RootSet:
    check_rank(rank)
    return frozenset(
        PositiveRoot(i, j) for i in range(1, rank + 2) for j in range(i + 1, rank + 2)
    )


def highest_root(rank: int) -> PositiveRoot:
    check_rank(rank)
    return PositiveRoot(1, rank + 1)


def parabolic_positive_roots(rank: int, generators: Optional[Iterable[int]] = None) -> RootSet:
    """Positive roots whose support lies inside J."""
    indices = generator_set(rank, generators)
    return frozenset(r for r in positive_roots(rank) if r.support <= indices)


def root_data(root: PositiveRoot) -> RootData:
    return RootData(root.support, root.depth)


def act(w: Permutation, root: PositiveRoot) -> SignedRoot:
    root.check_rank(w.rank)
    a, b = w(root.lo), w(root.hi)
    if a < b:
        return SignedRoot(PositiveRoot(a, b), True)
    return SignedRoot(PositiveRoot(b, a), False)


def inversion_set(x: Permutation) -> RootSet:
    """Left inversion set: pairs (i, j), i < j, with x^-1(i) > x^-1(j)."""
    inv = x.inverse().image
    size = len(inv)
    return frozenset(
        PositiveRoot(i, j)
        for i in range(1, size + 1)
        for j in range(i + 1, size + 1)
        if inv[i - 1] > inv[j - 1]
    )


def inversion_set_of_word(rank: int, word: Sequence[int]) -> RootSet:
    """Roots beta_k = s_{i1} ... s_{i(k-1)}(alpha_{ik}) of a reduced word."""
    check_rank(rank)
    prefix = identity(rank)
    roots: set[PositiveRoot] = set()
    for letter in word:
        check_generator(rank, letter)
        image = act(prefix, simple_root(letter))
        if not image.positive:
            raise NonReducedWordError(f"Word {tuple(word)} is not reduced at letter s{letter}")
        roots.add(image.root)
        prefix = compose(prefix, simple_reflection(rank, letter))
    if len(roots) < len(word):
        raise NonReducedWordError(f"Word {tuple(word)} is not reduced")
    return frozenset(roots)


def is_inversion_set(rank: int, roots: Iterable[PositiveRoot]) -> bool:
    """Closed and co-closed test for a set of positive roots of A_rank."""
    members = frozenset(roots)
    for root in members:
        if root.hi > rank + 1:
            return False
    for i in range(1, rank + 2):
        for j in range(i + 1, rank + 2):
            for k in range(j + 1, rank + 2):
                ij = PositiveRoot(i, j) in members
                jk = PositiveRoot(j, k) in members
                ik = PositiveRoot(i, k) in members
                if ij and jk and not ik:
                    return False
                if ik and not (ij or jk):
                    return False
    return True


def permutation_from_inversion_set(rank: int, roots: Iterable[PositiveRoot]) -> Permutation:
    """The unique element whose left inversion set is ``roots``.

    ``x^-1(i)`` is the position of ``i`` in the order where ``i`` precedes
    ``j`` (``i < j``) exactly when ``(i, j)`` is not inverted.
    """
    check_rank(rank)
    members = frozenset(roots)
    for root in members:
        root.check_rank(rank)
    size = rank + 1
    positions = []
    for i in range(1, size + 1):
        before = sum(1 for j in range(1, i) if PositiveRoot(j, i) not in members)
        after = sum(1 for j in range(i + 1, size + 1) if PositiveRoot(i, j) in members)
        positions.append(1 + before + after)
    if sorted(positions) != list(range(1, size + 1)):
        raise InvalidInversionSetError(f"{_format_roots(members)} is not an inversion set")
    element = Permutation(tuple(positions)).inverse()
    if inversion_set(element) != members:
        raise InvalidInversionSetError(f"{_format_roots(members)} is not an inversion set")
    return element


def reflection_of_root(rank: int, root: PositiveRoot) -> Permutation:
    """The reflection t_alpha, i.e. the transposition of lo and hi."""
    root.check_rank(rank)
    image = list(range(1, rank + 2))
    image[root.lo - 1], image[root.hi - 1] = root.hi, root.lo
    return Permutation(tuple(image))


def sorted_roots(roots: Iterable[PositiveRoot]) -> list[PositiveRoot]:
    return sorted(roots)


def _format_roots(roots: Iterable[PositiveRoot]) -> str:
    return "{" + ", ".join(str(r) for r in sorted_roots(roots)) + "}"
