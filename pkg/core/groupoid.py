"""Generators nu(alpha, Pi_J) of the groupoid of simple-root subsets and
decomposition of its morphisms."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable, Optional

from core.config import get_exhaustive_rank
from core.exceptions import BoundExceededError, InvalidGeneratorError
from core.typea import (
    GeneratorSet,
    Permutation,
    act,
    all_permutations,
    check_generator,
    check_rank,
    compose,
    generator_set,
    identity,
    length,
    longest_element,
    parabolic_positive_roots,
    simple_root,
)

logger = logging.getLogger(__name__)


def _simple_image(element: Permutation, index: int) -> Optional[int]:
    """The index k with element(alpha_index) = alpha_k, or None."""
    image = act(element, simple_root(index))
    if image.positive and image.root.is_simple:
        return image.root.lo
    return None


def _image_of_base(element: Permutation, base: Iterable[int]) -> Optional[GeneratorSet]:
    targets = []
    for index in base:
        target = _simple_image(element, index)
        if target is None:
            return None
        targets.append(target)
    return frozenset(targets)


@dataclass(frozen=True)
class NuGenerator:
    alpha: int
    base: GeneratorSet
    element: Permutation

    @property
    def rank(self) -> int:
        return self.element.rank

    @property
    def target(self) -> GeneratorSet:
        """Indices of the simple roots that the base is carried onto."""
        image = _image_of_base(self.element, self.base)
        if image is None:
            raise InvalidGeneratorError(f"nu({self.alpha}, {sorted(self.base)}) leaves Pi")
        return image


@dataclass(frozen=True)
class GroupoidMorphism:
    source: GeneratorSet
    element: Permutation
    target: GeneratorSet

    def is_valid(self) -> bool:
        return _image_of_base(self.element, self.source) == self.target

    def validate(self) -> "GroupoidMorphism":
        if not self.is_valid():
            raise InvalidGeneratorError(
                f"{self.element} does not map Pi_{sorted(self.source)} "
                f"onto Pi_{sorted(self.target)}"
            )
        return self


def nu(rank: int, alpha: int, base: Iterable[int]) -> NuGenerator:
    """w_{base + alpha} * w_base, checked against its defining root conditions."""
    check_rank(rank)
    check_generator(rank, alpha)
    base_set = generator_set(rank, base)
    if alpha in base_set:
        raise InvalidGeneratorError(f"alpha={alpha} must not lie in the base {sorted(base_set)}")
    union = base_set | {alpha}
    element = compose(longest_element(rank, union), longest_element(rank, base_set))

    base_roots = parabolic_positive_roots(rank, base_set)
    for root in parabolic_positive_roots(rank, union):
        image = act(element, root)
        if root in base_roots and not image.positive:
            raise InvalidGeneratorError(f"nu sends {root} in the base to a negative root")
        if root not in base_roots and image.positive:
            raise InvalidGeneratorError(f"nu keeps {root} outside the base positive")
    if _image_of_base(element, base_set) is None:
        raise InvalidGeneratorError("nu does not map the base simple roots to simple roots")
    return NuGenerator(alpha, base_set, element)


def nu_inverse(generator: NuGenerator) -> NuGenerator:
    """The inverse of a generator, again of the form nu(alpha', target)."""
    target = generator.target
    (alpha,) = (generator.base | {generator.alpha}) - target
    return nu(generator.rank, alpha, target)


def decompose_morphism(morphism: GroupoidMorphism) -> list[NuGenerator]:
    """Generators g_1, ..., g_k with element = g_k * ... * g_1 and additive lengths.

    At each step the smallest simple root with negative image under the
    remaining element is peeled off.
    """
    morphism.validate()
    rank = morphism.element.rank
    current = morphism.element
    base = morphism.source
    generators: list[NuGenerator] = []
    while not current.is_identity():
        alpha = next(
            a for a in range(1, rank + 1) if not act(current, simple_root(a)).positive
        )
        generator = nu(rank, alpha, base)
        generators.append(generator)
        current = compose(current, generator.element.inverse())
        base = generator.target
    if base != morphism.target:
        raise InvalidGeneratorError("Decomposition ended away from the morphism target")
    total = sum(length(g.element) for g in generators)
    if total != length(morphism.element):
        raise InvalidGeneratorError("Decomposition lengths are not additive")
    return generators


def _check_exhaustive(rank: int) -> None:
    limit = get_exhaustive_rank()
    if rank > limit:
        raise BoundExceededError(rank, limit, "exhaustive")


def groupoid_morphisms(rank: int, source: Iterable[int]) -> list[GroupoidMorphism]:
    """All morphisms out of Pi_J, i.e. elements mapping Pi_J into Pi."""
    check_rank(rank)
    _check_exhaustive(rank)
    source_set = generator_set(rank, source)
    morphisms = []
    for element in all_permutations(rank):
        target = _image_of_base(element, source_set)
        if target is not None:
            morphisms.append(GroupoidMorphism(source_set, element, target))
    return morphisms


def groupoid_objects(rank: int, source: Iterable[int]) -> set[GeneratorSet]:
    """Every K with w(Pi_J) = Pi_K for some w."""
    objects = {m.target for m in groupoid_morphisms(rank, source)}
    logger.debug("Groupoid of %s in A_%s has %s objects", sorted(source), rank, len(objects))
    return objects


def highest_rectangle_generator(rank: int, index: int) -> NuGenerator:
    """nu(alpha_index, S minus index)."""
    return nu(rank, index, set(range(1, rank + 1)) - {index})


def identity_morphism(rank: int, source: Iterable[int]) -> GroupoidMorphism:
    source_set = generator_set(rank, source)
    return GroupoidMorphism(source_set, identity(rank), source_set)


def morphism_of(element: Permutation, source: Iterable[int]) -> GroupoidMorphism:
    """The morphism out of Pi_source carried by ``element``."""
    source_set = generator_set(element.rank, source)
    target = _image_of_base(element, source_set)
    if target is None:
        raise InvalidGeneratorError(
            f"{element} does not map Pi_{sorted(source_set)} onto simple roots"
        )
    return GroupoidMorphism(source_set, element, target)
