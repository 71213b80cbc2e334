"""
Type definitions for coxeter-cubes.
Serialized documents are Pydantic models; their JSON layout is the exchange
format of the command-line tool.
"""

from enum import Enum
from typing import Optional

from pydantic import BaseModel, Field


# ----- Enums -----

class RenderFormat(str, Enum):
    """Output format for rendered objects."""
    JSON = "json"
    DOT = "dot"
    ASCII = "ascii"


class ReorientMove(str, Enum):
    """Reorientations of a Coxeter square."""
    DIAGONAL = "diagonal"
    FLIP_HORIZONTAL = "flip_horizontal"
    FLIP_VERTICAL = "flip_vertical"


# ----- Elements -----

class PermutationDocument(BaseModel):
    """An element in one-line notation with its canonical reduced word."""
    rank: int
    image: list[int]
    word: list[int] = Field(default_factory=list)


class SquareDocument(BaseModel):
    """A Coxeter square (w, x, y, z) in one-line notation."""
    w: list[int]
    x: list[int]
    y: list[int]
    z: list[int]
    valid: Optional[bool] = None


class TransferDocument(BaseModel):
    """A triple (w, x, y) and whether w(Phi_x) = Phi_y."""
    w: list[int]
    x: list[int]
    y: Optional[list[int]] = None
    holds: bool


# ----- Coxeter matrices -----

class CoxeterMatrixDocument(BaseModel):
    """Coxeter matrix with infinity encoded as 0."""
    size: int
    m: list[list[int]]


# ----- Cubes -----

class CubeDocument(BaseModel):
    """Edge labels (strings over 0, 1, *) mapped to one-line notation."""
    rank: int
    edges: dict[str, list[int]]


class NuDocument(BaseModel):
    """A generator nu(alpha, Pi_base)."""
    alpha: int
    base: list[int]
    element: list[int]
    word: list[int]


# ----- Partitions and trees -----

class PartitionDocument(BaseModel):
    """Based rectangles (lo, base, hi) sorted lexicographically."""
    rank: int
    rectangles: list[list[int]]


class TreeDocument(BaseModel):
    """Binary tree as nested two-element arrays, 0 for a leaf."""
    tree: int | list


class CubeClassReport(BaseModel):
    """Counts of cube classes from independent enumerations."""
    rank: int
    count: int
    flip_orbit_count: Optional[int] = Field(default=None, alias="flipOrbitCount")
    brute_force_count: Optional[int] = Field(default=None, alias="bruteForceCount")
    representatives: list[list[list[int]]] = Field(default_factory=list)

    class Config:
        populate_by_name = True


class EdgeReport(BaseModel):
    """Edge elements of cubes in A_n, computed several ways."""
    rank: int
    count: int
    elements: list[list[int]]
    bigrassmannian_count: Optional[int] = Field(default=None, alias="bigrassmannianCount")
    orbit_count: Optional[int] = Field(default=None, alias="orbitCount")

    class Config:
        populate_by_name = True
