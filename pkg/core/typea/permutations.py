"""Permutations of {1, ..., n+1} as elements of the A_n Coxeter group.

Products follow ``(x * y)(i) = x(y(i))``, so the word ``s2 s1`` is the
permutation ``[3, 1, 2]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from itertools import permutations as _ordered_arrangements
from typing import Iterable, Iterator, NamedTuple, Optional, Sequence

from core.exceptions import InvalidElementError, RankMismatchError

Word = tuple[int, ...]
GeneratorSet = frozenset[int]


def check_rank(rank: int) -> int:
    """Return ``rank`` if it is a positive integer, otherwise raise."""
    if isinstance(rank, bool) or not isinstance(rank, int) or rank < 1:
        raise InvalidElementError(f"Rank must be a positive integer, got {rank!r}")
    return rank


def check_generator(rank: int, index: int) -> int:
    if isinstance(index, bool) or not isinstance(index, int) or not 1 <= index <= rank:
        raise InvalidElementError(f"Generator index {index!r} is outside 1..{rank}")
    return index


def generator_set(rank: int, indices: Optional[Iterable[int]] = None) -> GeneratorSet:
    """Validate a subset of ``{1..rank}``; ``None`` means every generator."""
    check_rank(rank)
    if indices is None:
        return frozenset(range(1, rank + 1))
    return frozenset(check_generator(rank, i) for i in indices)


@dataclass(frozen=True)
class Permutation:
    """An element of A_n in one-line notation; ``image[i - 1]`` is the image of ``i``."""

    image: tuple[int, ...]

    def __post_init__(self) -> None:
        image = tuple(self.image)
        object.__setattr__(self, "image", image)
        if len(image) < 2 or sorted(image) != list(range(1, len(image) + 1)):
            raise InvalidElementError(
                f"{list(image)} is not a permutation of 1..{len(image)} with rank >= 1"
            )

    @property
    def rank(self) -> int:
        return len(self.image) - 1

    def __call__(self, i: int) -> int:
        return self.image[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def inverse(self) -> "Permutation":
        result = [0] * len(self.image)
        for position, value in enumerate(self.image, 1):
            result[value - 1] = position
        return Permutation(tuple(result))

    @property
    def length(self) -> int:
        return length(self)

    def is_identity(self) -> bool:
        return all(value == position for position, value in enumerate(self.image, 1))

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        """Total order used for canonical forms: length first, then one-line notation."""
        return (self.length, self.image)

    def to_list(self) -> list[int]:
        return list(self.image)

    def __str__(self) -> str:
        return "[" + ",".join(str(v) for v in self.image) + "]"


class DescentData(NamedTuple):
    left_descents: frozenset[int]
    right_descents: frozenset[int]
    bigrassmannian: bool


def identity(rank: int) -> Permutation:
    check_rank(rank)
    return Permutation(tuple(range(1, rank + 2)))


def simple_reflection(rank: int, index: int) -> Permutation:
    """The adjacent transposition s_index swapping index and index + 1."""
    check_rank(rank)
    check_generator(rank, index)
    image = list(range(1, rank + 2))
    image[index - 1], image[index] = image[index], image[index - 1]
    return Permutation(tuple(image))


def same_rank(*elements: Permutation) -> int:
    ranks = {element.rank for element in elements}
    if len(ranks) != 1:
        raise RankMismatchError(f"Elements have different ranks: {sorted(ranks)}")
    return ranks.pop()


def compose(x: Permutation, y: Permutation) -> Permutation:
    """Return ``x * y`` with ``(x * y)(i) = x(y(i))``."""
    same_rank(x, y)
    return Permutation(tuple(x.image[j - 1] for j in y.image))


def inverse(x: Permutation) -> Permutation:
    return x.inverse()


def product(rank: int, factors: Iterable[Permutation]) -> Permutation:
    """Left-to-right product of ``factors``; the empty product is the identity."""
    return reduce(compose, factors, identity(rank))


def from_word(rank: int, word: Sequence[int]) -> Permutation:
    """Evaluate ``s_{i1} s_{i2} ... s_{ik}`` as written."""
    return product(rank, (simple_reflection(rank, i) for i in word))


def length(x: Permutation) -> int:
    """Number of pairs i < j with x(i) > x(j)."""
    image = x.image
    return sum(
        1
        for i in range(len(image))
        for j in range(i + 1, len(image))
        if image[i] > image[j]
    )


def left_descents(x: Permutation) -> frozenset[int]:
    """Indices i with alpha_i in the left inversion set, i.e. x^-1(i) > x^-1(i+1)."""
    inv = x.inverse().image
    return frozenset(i for i in range(1, x.rank + 1) if inv[i - 1] > inv[i])


def right_descents(x: Permutation) -> frozenset[int]:
    image = x.image
    return frozenset(i for i in range(1, x.rank + 1) if image[i - 1] > image[i])


def descent_data(x: Permutation) -> DescentData:
    left = left_descents(x)
    right = right_descents(x)
    return DescentData(left, right, len(left) == 1 and len(right) == 1)


def is_bigrassmannian(x: Permutation) -> bool:
    return descent_data(x).bigrassmannian


def canonical_reduced_word(x: Permutation) -> Word:
    """Lexicographically smallest reduced word, peeling the smallest left descent."""
    letters: list[int] = []
    current = x
    while not current.is_identity():
        i = min(left_descents(current))
        letters.append(i)
        current = compose(simple_reflection(x.rank, i), current)
    return tuple(letters)


def format_word(word: Sequence[int]) -> str:
    if not word:
        return "e"
    return " ".join(f"s{i}" for i in word)


def longest_element(rank: int, generators: Optional[Iterable[int]] = None) -> Permutation:
    """Longest element of the standard parabolic subgroup W_J (J defaults to all of S).

    Each maximal run ``a..c`` of J contributes the reversal of positions ``a..c+1``.
    """
    indices = sorted(generator_set(rank, generators))
    image = list(range(1, rank + 2))
    for start, stop in _maximal_runs(indices):
        image[start - 1 : stop + 1] = reversed(image[start - 1 : stop + 1])
    return Permutation(tuple(image))


def _maximal_runs(sorted_indices: Sequence[int]) -> Iterator[tuple[int, int]]:
    run_start: Optional[int] = None
    previous: Optional[int] = None
    for index in sorted_indices:
        if run_start is None:
            run_start = index
        elif previous is not None and index != previous + 1:
            yield run_start, previous
            run_start = index
        previous = index
    if run_start is not None and previous is not None:
        yield run_start, previous


def all_permutations(rank: int) -> list[Permutation]:
    """Every element of A_rank, ordered by one-line notation."""
    check_rank(rank)
    return [Permutation(p) for p in _ordered_arrangements(range(1, rank + 2))]


def support(x: Permutation) -> frozenset[int]:
    """Generators occurring in a reduced word of ``x``."""
    return frozenset(canonical_reduced_word(x))
