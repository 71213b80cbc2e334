"""Coxeter squares: quadruples (w, x, y, z) with w x = y z and w(Phi_x) = Phi_y.

The square is drawn with x and y on the vertical sides and w, z on the
horizontal ones::

    . --w--> .
    ^        ^
    x        y
    |        |
    . --z--> .

so both paths from the initial to the terminal vertex multiply to ``w x = y z``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from core.transfer import transfer_check
from core.typea import Permutation, compose, join, same_rank
from core.types import ReorientMove


@dataclass(frozen=True)
class CoxeterSquare:
    w: Permutation
    x: Permutation
    y: Permutation
    z: Permutation

    @property
    def rank(self) -> int:
        return same_rank(self.w, self.x, self.y, self.z)

    def as_tuple(self) -> tuple[Permutation, Permutation, Permutation, Permutation]:
        return (self.w, self.x, self.y, self.z)

    def is_valid(self) -> bool:
        return square_validate(self)


def square_validate(square: CoxeterSquare) -> bool:
    """Non-identity edges, w x = y z and w(Phi_x) = Phi_y."""
    w, x, y, z = square.as_tuple()
    same_rank(w, x, y, z)
    if any(edge.is_identity() for edge in (w, x, y, z)):
        return False
    if compose(w, x) != compose(y, z):
        return False
    return transfer_check(w, x, y)


def square_complete(x1: Permutation, x2: Permutation) -> Optional[CoxeterSquare]:
    """The square (x1, x1^-1 J, x2, x2^-1 J) with J = x1 v x2, if it is valid."""
    same_rank(x1, x2)
    top = join([x1, x2])
    square = CoxeterSquare(
        x1,
        compose(x1.inverse(), top),
        x2,
        compose(x2.inverse(), top),
    )
    return square if square_validate(square) else None


def square_reorient(square: CoxeterSquare, move: ReorientMove | str) -> CoxeterSquare:
    try:
        move = ReorientMove(move)
    except ValueError:
        raise ValueError(f"Unknown reorientation move: {move!r}") from None
    w, x, y, z = square.as_tuple()
    if move is ReorientMove.DIAGONAL:
        return CoxeterSquare(y, z, w, x)
    if move is ReorientMove.FLIP_HORIZONTAL:
        return CoxeterSquare(w.inverse(), y, x, z.inverse())
    return CoxeterSquare(y.inverse(), w, z, x.inverse())
