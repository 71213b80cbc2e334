"""The equation w(Phi_x) = Phi_y in A_n: checking, solving and derived identities."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional

from core.config import get_exhaustive_rank
from core.exceptions import BoundExceededError
from core.typea import (
    Permutation,
    RootSet,
    act,
    all_permutations,
    check_rank,
    compose,
    identity,
    inversion_set,
    is_inversion_set,
    length,
    longest_element,
    lower_interval,
    permutation_from_inversion_set,
    same_rank,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TransferTriple:
    w: Permutation
    x: Permutation
    y: Permutation

    def __post_init__(self) -> None:
        same_rank(self.w, self.x, self.y)

    @property
    def holds(self) -> bool:
        return transfer_check(self.w, self.x, self.y)


def transfer_check(w: Permutation, x: Permutation, y: Permutation) -> bool:
    """True iff w maps Phi_x onto Phi_y with every image positive."""
    same_rank(w, x, y)
    images = set()
    for root in inversion_set(x):
        image = act(w, root)
        if not image.positive:
            return False
        images.add(image.root)
    return images == inversion_set(y)


def transfer_image(w: Permutation, x: Permutation) -> Optional[Permutation]:
    """The y with Phi_y = w(Phi_x), or None when some image is negative or the
    image is not an inversion set."""
    rank = same_rank(w, x)
    images = set()
    for root in inversion_set(x):
        image = act(w, root)
        if not image.positive:
            return None
        images.add(image.root)
    if not is_inversion_set(rank, images):
        return None
    return permutation_from_inversion_set(rank, images)


def cocycle_conjugate(w: Permutation, x: Permutation) -> RootSet:
    """Root encoding of w N(x) w^-1: the images of Phi_x with signs dropped."""
    same_rank(w, x)
    return frozenset(act(w, root).root for root in inversion_set(x))


def right_divisor_check(w: Permutation, u: Permutation) -> bool:
    """True iff u = g w with l(u) = l(g) + l(w)."""
    same_rank(w, u)
    return inversion_set(w.inverse()) <= inversion_set(u.inverse())


def solve_transfers(x: Permutation, y: Permutation) -> set[Permutation]:
    """Every w, identity included, with w(Phi_x) = Phi_y.

    Candidates are the right divisors of w0 x^-1, enumerated as inverses of the
    lower interval below (w0 x^-1)^-1.
    """
    rank = same_rank(x, y)
    if length(x) != length(y):
        return set()
    bound = compose(longest_element(rank), x.inverse()).inverse()
    candidates = [z.inverse() for z in lower_interval(bound)]
    solutions = {w for w in candidates if transfer_check(w, x, y)}
    logger.debug(
        "solve_transfers(%s, %s): %s candidates, %s solutions",
        x,
        y,
        len(candidates),
        len(solutions),
    )
    return solutions


def w0_transfer(x: Permutation) -> TransferTriple:
    """The triple (w0 x^-1, x, w0 x^-1 w0), which always transfers."""
    w0 = longest_element(x.rank)
    w = compose(w0, x.inverse())
    return TransferTriple(w, x, compose(w, w0))


def dual_transfer(triple: TransferTriple) -> TransferTriple:
    """(w0 y^-1 w x w0, w0 x^-1 w0, w0 y^-1 w0) for a triple (w, x, y)."""
    w0 = longest_element(triple.w.rank)
    y_inv = triple.y.inverse()
    w = compose(compose(compose(w0, y_inv), compose(triple.w, triple.x)), w0)
    return TransferTriple(
        w,
        compose(compose(w0, triple.x.inverse()), w0),
        compose(compose(w0, y_inv), w0),
    )


def swap_transfer_check(
    w: Permutation, x: Permutation, y: Permutation, z: Permutation
) -> tuple[bool, bool]:
    """For y z = w x, the pair (w(Phi_x) = Phi_y, y(Phi_z) = Phi_w)."""
    same_rank(w, x, y, z)
    if compose(y, z) != compose(w, x):
        raise ValueError("swap_transfer_check requires y*z == w*x")
    return transfer_check(w, x, y), transfer_check(y, z, w)


def near_longest_rigidity(rank: int) -> bool:
    """Check that l(x) = l(w0) - 1 and w(Phi_x) = Phi_y with w != 1 force x = y."""
    check_rank(rank)
    limit = get_exhaustive_rank()
    if rank > limit:
        raise BoundExceededError(rank, limit, "exhaustive")
    top = length(longest_element(rank)) - 1
    near_longest = [x for x in all_permutations(rank) if length(x) == top]
    for x in near_longest:
        for y in near_longest:
            if x == y:
                continue
            for w in solve_transfers(x, y):
                if w != identity(rank):
                    logger.info("Rigidity counterexample: w=%s x=%s y=%s", w, x, y)
                    return False
    return True
